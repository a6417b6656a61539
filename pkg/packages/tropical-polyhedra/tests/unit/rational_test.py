from fractions import Fraction

import pytest
from tropical_polyhedra.rational import nullspace, primitive, rank, rat_to_str, to_rat


def test_parse_and_format():
    assert to_rat("-7/2") == Fraction(-7, 2)
    assert to_rat(3) == 3
    assert rat_to_str(Fraction(6, 4)) == "3/2"
    assert rat_to_str(Fraction(-4, 2)) == "-2"
    with pytest.raises(ValueError):
        to_rat("1/0")
    with pytest.raises(ValueError):
        to_rat(0.5)


def test_primitive():
    assert primitive([2, -4, 6]) == (1, -2, 3)
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    with pytest.raises(ValueError):
        primitive([0, 0])


def test_rank_and_nullspace():
    rows = [(1, 1, 0), (2, 2, 0)]
    assert rank(rows) == 1
    basis = nullspace(rows, 3)
    assert len(basis) == 2
    for b in basis:
        assert b[0] + b[1] == 0
