"""The ordered table mapping feature keys to local tangency labels."""

import hashlib
from dataclasses import dataclass
from functools import lru_cache

from loguru import logger

from tritangent_classes.exceptions import CatalogError
from tritangent_classes.resources import load_resource

CATALOG_FILE = "tangency_catalog.txt"
CHECKSUM_FILE = "tangency_catalog.sha256"

FEATURE_NAMES = ("V", "D", "M", "LV", "SV", "GV", "P", "C", "E", "L")
FLAVOR_RULES = frozenset({"-", "gamma", "overlap", "collinear"})


@dataclass(frozen=True)
class CatalogRow:
    """One table row; a None pattern entry matches anything."""

    pattern: tuple[frozenset[int] | None, ...]
    label: str
    flavor_rule: str
    line: int

    def matches(self, key: tuple[int, ...]) -> bool:
        return all(allowed is None or value in allowed for allowed, value in zip(self.pattern, key))


def _parse_field(token: str, line: int) -> frozenset[int] | None:
    if token == "*":
        return None
    try:
        return frozenset(int(part) for part in token.split("|"))
    except ValueError as e:
        raise CatalogError(f"Catalog line {line}: bad field {token!r}") from e


def parse_catalog(text: str) -> tuple[CatalogRow, ...]:
    rows = []
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if "->" not in body:
            raise CatalogError(f"Catalog line {n}: missing '->'")
        lhs, rhs = body.split("->", 1)
        fields = lhs.split()
        target = rhs.split()
        if len(fields) != len(FEATURE_NAMES) or len(target) != 2:
            raise CatalogError(f"Catalog line {n}: expected {len(FEATURE_NAMES)} fields and 'label flavor'")
        label, flavor_rule = target
        if flavor_rule not in FLAVOR_RULES:
            raise CatalogError(f"Catalog line {n}: unknown flavor rule {flavor_rule!r}")
        rows.append(
            CatalogRow(
                pattern=tuple(_parse_field(tok, n) for tok in fields),
                label=label,
                flavor_rule=flavor_rule,
                line=n,
            )
        )
    if not rows:
        raise CatalogError("Catalog is empty")
    return tuple(rows)


def verify_checksum(text: str, checksum_text: str) -> None:
    expected = checksum_text.split()[0].strip().lower()
    actual = hashlib.sha256(text.encode("utf-8")).hexdigest()
    if actual != expected:
        raise CatalogError(f"Catalog checksum mismatch: expected {expected}, got {actual}")


@lru_cache(maxsize=1)
def load_catalog() -> tuple[CatalogRow, ...]:
    text = load_resource(CATALOG_FILE)
    verify_checksum(text, load_resource(CHECKSUM_FILE))
    rows = parse_catalog(text)
    logger.debug(f"Loaded tangency catalog with {len(rows)} rows")
    return rows


def lookup(key: tuple[int, ...], rows: tuple[CatalogRow, ...] | None = None) -> CatalogRow | None:
    """First row matching `key`."""
    for row in rows if rows is not None else load_catalog():
        if row.matches(key):
            return row
    return None
