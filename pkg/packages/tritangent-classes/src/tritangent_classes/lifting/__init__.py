from tritangent_classes.lifting.partition import (
    LiftableMember,
    class_partition,
    has4b,
    liftable_members,
    member_mult,
)
from tritangent_classes.lifting.report import (
    Analysis,
    CheckResult,
    LiftingReport,
    analyze,
    build_report,
    verify_report,
)
from tritangent_classes.lifting.table import LOCAL_MULTIPLICITIES, local_mult

__all__ = [
    "Analysis",
    "CheckResult",
    "LOCAL_MULTIPLICITIES",
    "LiftableMember",
    "LiftingReport",
    "analyze",
    "build_report",
    "class_partition",
    "has4b",
    "liftable_members",
    "local_mult",
    "member_mult",
    "verify_report",
]
