from tritangent_classes.cli import main
from tritangent_classes.lifting.report import LiftingReport, verify_report

__version__ = "0.1.0"

__all__ = ["LiftingReport", "main", "verify_report"]
