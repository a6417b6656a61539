"""Local lifting multiplicities of the tangency types."""

from tritangent_classes.exceptions import UnmappedLabelError
from tritangent_classes.tangency.models import Flavor, TangencyTuple
from tritangent_classes.tangency.tritangent import compute_mu

MU = "mu"

LOCAL_MULTIPLICITIES: dict[str, int | str] = {
    **dict.fromkeys(
        ["(1a)", "(1b)", "(2b)", "(3ab)", "(3cb)", "(3bb)", "(3bb1)", "(3bb2)", "(4b)", "(7)", "(1')", "(3a')"],
        0,
    ),
    **dict.fromkeys(["(2a)", "(5b)", "(6b)", "(2a')", "(4b')", "(6b')"], 1),
    **dict.fromkeys(["(3a)", "(3c)", "(3aa)", "(3ac)", "(3cc)", "(3d)", "(3h)", "(5a)", "(3c')"], 2),
    "(3f)": 4,
    "(8)": 8,
    "(4a')": MU,
    "(6a')": MU,
}

# 1 when horizontal or vertical, μ when diagonal
FLAVORED = frozenset({"(4a)", "(6a)"})


def local_mult(t: TangencyTuple, idx: int) -> int:
    kind = t.types[idx]
    if kind.label in FLAVORED:
        if kind.flavor in (Flavor.HORIZONTAL, Flavor.VERTICAL):
            return 1
        if kind.flavor == Flavor.DIAGONAL:
            return compute_mu(t, idx)
        raise UnmappedLabelError(f"{kind.label} without a flavor")
    value = LOCAL_MULTIPLICITIES.get(kind.label)
    if value is None:
        raise UnmappedLabelError(f"No lifting multiplicity for {kind.label}")
    return compute_mu(t, idx) if value == MU else value
