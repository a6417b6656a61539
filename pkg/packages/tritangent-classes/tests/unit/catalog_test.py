import pytest

from tritangent_classes.exceptions import CatalogError
from tritangent_classes.lifting.table import LOCAL_MULTIPLICITIES
from tritangent_classes.resources import load_resource
from tritangent_classes.tangency.catalog import (
    CATALOG_FILE,
    CHECKSUM_FILE,
    load_catalog,
    lookup,
    parse_catalog,
    verify_checksum,
)


def test_bundled_catalog_matches_checksum():
    verify_checksum(load_resource(CATALOG_FILE), load_resource(CHECKSUM_FILE))


def test_edited_catalog_is_rejected():
    text = load_resource(CATALOG_FILE).replace("(8)", "(9)")
    with pytest.raises(CatalogError, match="checksum"):
        verify_checksum(text, load_resource(CHECKSUM_FILE))


@pytest.mark.parametrize(
    "key, label, rule",
    [
        ((3, 0, 2, 0, 0, 0, 0, 0, 0, 0), "(1a)", "-"),
        ((3, 0, 2, 1, 0, 0, 0, 0, 0, 0), "(4a)", "gamma"),
        ((3, 0, 2, 1, 1, 1, 0, 0, 0, 1), "(6a)", "collinear"),
        ((3, 1, 6, 0, 0, 1, 1, 1, 1, 0), "(8)", "-"),
        ((3, 1, 2, 2, 2, 1, 1, 3, 5, 0), "(7)", "-"),
        ((4, 0, 2, 0, 0, 0, 0, 0, 0, 0), "(1')", "-"),
    ],
)
def test_lookup(key, label, rule):
    row = lookup(key)
    assert (row.label, row.flavor_rule) == (label, rule)


def test_lookup_without_match():
    assert lookup((5, 0, 2, 0, 0, 0, 0, 0, 0, 0)) is None


def test_catalog_labels_are_the_tabulated_types():
    labels = {row.label for row in load_catalog()}
    assert len(labels) == 33
    assert labels == set(LOCAL_MULTIPLICITIES) | {"(4a)", "(6a)"}


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty"),
        ("3 0 2 0 0 0 * * * * (1a) -", "missing '->'"),
        ("3 0 2 0 0 * * * * -> (1a) -", "expected 10 fields"),
        ("3 0 2 0 0 0 * * * * -> (1a) sideways", "unknown flavor rule"),
        ("3 0 x 0 0 0 * * * * -> (1a) -", "bad field"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(CatalogError, match=message):
        parse_catalog(text)


def test_first_match_wins():
    rows = parse_catalog("3 * * * * * * * * * -> (A) -\n3 0 * * * * * * * * -> (B) -\n")
    assert lookup((3, 0, 2, 0, 0, 0, 0, 0, 0, 0), rows).label == "(A)"
