from tropical_curves import D4Element, canonical_element, d4_apply


def test_group_structure():
    group = D4Element.full_group()
    assert len({g.matrix for g in group}) == 8
    for g in group:
        assert (g * g.inverse).matrix == ((1, 0), (0, 1))
        for h in group:
            product = g * h
            assert product.apply((2, 1)) == g.apply(h.apply((2, 1)))


def test_lattice_action_preserves_square():
    for g in D4Element.full_group():
        image = {g.apply_lattice((i, j)) for i in range(4) for j in range(4)}
        assert image == {(i, j) for i in range(4) for j in range(4)}


def test_action_on_curve(generic_curve):
    for g in D4Element.full_group():
        moved = d4_apply(g, generic_curve)
        assert {v.point for v in moved.vertices} == {g.apply(v.point) for v in generic_curve.vertices}


def test_canonical_element():
    for direction in [(0, 1), (-1, 0), (1, -1), (-2, 1)]:
        x, y = canonical_element(direction).apply(direction)
        assert x >= y >= 0
