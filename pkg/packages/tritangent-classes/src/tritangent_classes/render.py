"""SVG drawings of a tritangent class: Γ with the regions swept by v0 and v1."""

from fractions import Fraction
from pathlib import Path

import jinja2
from loguru import logger

from tritangent_classes.exceptions import TritangentError
from tritangent_classes.lifting.report import CellReport, ClassReport, LiftingReport

TEMPLATE = "class.svg.j2"
CANVAS = 800
MARGIN = 0.15

jinja_env = jinja2.Environment(
    loader=jinja2.PackageLoader("tritangent_classes", "assets")
)  # nosec

Point = tuple[float, float]


def _f(value: str) -> float:
    return float(Fraction(value))


def convex_hull(points: list[Point]) -> list[Point]:
    """Monotone chain; collinear points are dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o: Point, a: Point, b: Point) -> float:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def project(cell: CellReport, vertex: str, reach: float) -> list[Point]:
    """Points of the cell's image under (x, y, ℓ) -> v0 or v1, rays cut at `reach`."""
    s = cell.side
    points = []
    for x, y, length in cell.vertices:
        x, y, length = _f(x), _f(y), _f(length)
        base = (x, y) if vertex == "v0" else (x + length, y + s * length)
        points.append(base)
        for dx, dy, dl in cell.rays:
            step = (dx, dy) if vertex == "v0" else (dx + dl, dy + s * dl)
            points.append((base[0] + reach * step[0], base[1] + reach * step[1]))
    return points


class Canvas:
    def __init__(self, points: list[Point]):
        xs, ys = [p[0] for p in points], [p[1] for p in points]
        self.x_lo, self.x_hi = min(xs), max(xs)
        self.y_lo, self.y_hi = min(ys), max(ys)
        span = max(self.x_hi - self.x_lo, self.y_hi - self.y_lo, 1.0)
        pad = MARGIN * span
        self.x_lo, self.y_lo = self.x_lo - pad, self.y_lo - pad
        self.span = span + 2 * pad
        self.scale = CANVAS / self.span

    def __call__(self, p: Point) -> Point:
        return (
            round((p[0] - self.x_lo) * self.scale, 2),
            round((self.y_lo + self.span - p[1]) * self.scale, 2),
        )

    def shape(self, points: list[Point]) -> str:
        hull = [self(p) for p in convex_hull(points)]
        if len(hull) == 1:
            ((x, y),) = hull
            return f'<circle cx="{x}" cy="{y}" r="3"/>'
        if len(hull) == 2:
            (x1, y1), (x2, y2) = hull
            return f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke-width="3"/>'
        coords = " ".join(f"{x},{y}" for x, y in hull)
        return f'<polygon points="{coords}"/>'


def find_class(report: LiftingReport, class_id: int) -> ClassReport:
    for cls in report.classes:
        if cls.id == class_id:
            return cls
    raise TritangentError(f"Unknown class id {class_id}; the report has classes 1..{len(report.classes)}")


def render_class(report: LiftingReport, class_id: int) -> str:
    cls = find_class(report, class_id)
    curve = report.curve
    finite = [(_f(x), _f(y)) for x, y in curve.vertices]
    for cell in cls.cells:
        finite += project(cell, "v0", 0.0) + project(cell, "v1", 0.0)
    canvas = Canvas(finite)
    reach = 2 * canvas.span

    segments = [(*canvas((_f(a[0]), _f(a[1]))), *canvas((_f(b[0]), _f(b[1])))) for a, b in curve.edges]
    for start, (dx, dy) in curve.legs:
        x, y = _f(start[0]), _f(start[1])
        segments.append((*canvas((x, y)), *canvas((x + reach * dx, y + reach * dy))))

    cells = [c for c in cls.cells if c.bounded] or cls.cells
    members = []
    for m in cls.liftable_members:
        x, y, length = _f(m.v0[0]), _f(m.v0[1]), _f(m.length)
        side = (length > 0) - (length < 0)
        x0, y0 = canvas((x, y))
        x1, y1 = canvas((x + length, y + (side or 1) * length))
        members.append({"x0": x0, "y0": y0, "x1": x1, "y1": y1, "label": str(m.multiplicity)})

    template = jinja_env.get_template(TEMPLATE)
    return template.render(
        width=CANVAS,
        height=CANVAS,
        class_id=cls.id,
        partition=cls.partition,
        dims=cls.dims,
        v0_shapes=[canvas.shape(project(c, "v0", reach)) for c in cells],
        v1_shapes=[canvas.shape(project(c, "v1", reach)) for c in cells],
        segments=segments,
        members=members,
    )


def render_to_file(report: LiftingReport, class_id: int, out_dir: Path) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"class_{class_id:02d}.svg"
    path.write_text(render_class(report, class_id))
    logger.info(f"Rendered class {class_id} to {path}")
    return path
