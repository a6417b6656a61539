from fractions import Fraction

SCHEMA_VERSION = 1

# stable intersection
DEFAULT_PERTURBATION = (1, 13)
LAMBDA_DIRECTIONS = ((1, 0), (0, 1), (1, 1), (-1, 1))
TRITANGENT_PATTERNS = frozenset({(2, 2, 2), (2, 4), (6,)})
TOTAL_INTERSECTION = 6

# weights of the partial orders on R^2 used to refine the parameter space
ORDER_WEIGHTS = {
    "diagonal": (1, -1),
    "antidiagonal": (1, 1),
    "horizontal": (1, 0),
    "vertical": (0, 1),
}

# legs of Λ that must be clean (no odd leg-local component) on each side of ℓ = 0
SIDE_LEGS = {
    1: (("W", "S"), ("E", "N")),
    -1: (("E", "S"), ("W", "N")),
    0: (("E", "N", "W", "S"), ()),
}

EXPECTED_CLASS_COUNT = 15
LIFT_TOTAL = 8
LIFT_VALUES = (1, 2, 4, 8)

ADMISSIBLE_PARTITIONS = frozenset(
    {(8, 0, 0, 0), (4, 2, 0, 0), (0, 4, 0, 0), (0, 2, 1, 0), (0, 0, 2, 0), (0, 0, 0, 1)}
)

ADMISSIBLE_DIMENSIONS = frozenset(
    {
        (0, 0, 0),
        (0, 0, 1),
        (0, 0, 2),
        (0, 1, 1),
        (1, 1, 1),
        (1, 1, 2),
        (1, 1, 3),
        (1, 2, 2),
        (2, 2, 2),
        (2, 2, 3),
        (3, 3, 3),
    }
)

# partition expected from the dimension of a (bounded, nonspecial) part and the
# presence of a (4b) member
PARTITION_BY_DIMENSION = {
    (3, False): (8, 0, 0, 0),
    (3, True): (8, 0, 0, 0),
    (2, True): (4, 2, 0, 0),
    (2, False): (0, 4, 0, 0),
    (1, True): (0, 2, 1, 0),
    (1, False): (0, 0, 2, 0),
    (0, False): (0, 0, 0, 1),
    (0, True): (0, 0, 0, 1),
}

# labels that may only appear on cells of a given dimension
LOCAL_TYPES_OF_3_CELLS = frozenset({"(1a)", "(1b)", "(1')"})
ZERO_CELL_TYPES = frozenset({"(3h)", "(3d)", "(8)", "(6a')", "(6b')"})

# re-perturbation of non-generic inputs: A_ij += i*j*delta
RETRY_DELTA = Fraction(1, 10**6)
DEFAULT_RETRY_LIMIT = 3

EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_NOT_SMOOTH = 2
EXIT_NON_GENERIC = 3
EXIT_BAD_INPUT = 4

DEFAULT_OUTPUT_DIR = "./tritangent_output"
REPORT_FILENAME = "report.json"

# partitions allowed by the dimension of the bounded part when Γ has generic
# edge lengths
PARTITIONS_BY_BOUNDED_DIMENSION = {
    3: frozenset({(8, 0, 0, 0)}),
    2: frozenset({(4, 2, 0, 0), (0, 4, 0, 0)}),
    1: frozenset({(0, 2, 1, 0), (0, 0, 2, 0)}),
    0: frozenset({(0, 0, 0, 1)}),
}
