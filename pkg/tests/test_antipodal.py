import pytest

from planecode.antipodal import (
    AntipodalError,
    NotAntipodalError,
    NotARootError,
    PartialLinearSpace,
    PLSError,
    UnsupportedOrderError,
    antipodal_from_pg24,
    cyclic_antipodal,
    find_good_triangle,
    is_good_triangle,
    isomorphism,
    mobius_kantor_pls,
    mobius_kantor_points,
    validate_antipodal,
)
from planecode.field import field_new
from planecode.geometry import pg2

FANO_LINES = [
    (0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5),
]


def test_pls_rejects_two_lines_through_a_pair():
    with pytest.raises(PLSError):
        PartialLinearSpace(4, [(0, 1, 2), (0, 1, 3)])


def test_cyclic_order2_validates():
    pls = cyclic_antipodal(2)
    assert pls.n_points == 8
    assert all(len(l) == 3 for l in pls.lines)
    ap = validate_antipodal(pls)
    assert ap.order == 2


def test_cyclic_order3_validates():
    pls = cyclic_antipodal(3)
    assert pls.n_points == 14
    assert all(len(l) == 4 for l in pls.lines)
    ap = validate_antipodal(pls)
    assert ap.order == 3


def test_cyclic_order4_unsupported():
    with pytest.raises(UnsupportedOrderError):
        cyclic_antipodal(4)


def test_fano_is_not_antipodal():
    with pytest.raises(NotAntipodalError):
        validate_antipodal(PartialLinearSpace(7, FANO_LINES))


@pytest.mark.parametrize("order", [2, 3])
def test_perp_involutions_and_line_perp(order):
    ap = validate_antipodal(cyclic_antipodal(order))
    pls = ap.pls
    for p in range(pls.n_points):
        assert ap.perp_point[ap.perp_point[p]] == p
        assert not pls.collinear(p, ap.perp_point[p])
    for i, l in enumerate(pls.lines):
        j = ap.perp_line[i]
        assert ap.perp_line[j] == i
        assert not (pls.line_sets[i] & pls.line_sets[j])
        assert frozenset(ap.perp_point[p] for p in l) == pls.line_sets[j]


def test_point_degree_counts():
    for order in (2, 3):
        ap = validate_antipodal(cyclic_antipodal(order))
        for ls in ap.pls.point_lines:
            assert len(ls) == order + 1


def test_antipodal_from_pg24_counts_and_validation():
    pls = antipodal_from_pg24()
    assert pls.n_points == 14
    assert len(pls.lines) == 14
    assert all(len(l) == 4 for l in pls.lines)
    ap = validate_antipodal(pls)
    assert ap.order == 3


def test_pg24_complement_isomorphic_to_cyclic():
    a = antipodal_from_pg24()
    b = cyclic_antipodal(3)
    mapping = isomorphism(a, b)
    assert mapping is not None
    mapped = sorted(tuple(sorted(mapping[p] for p in l)) for l in a.lines)
    assert mapped == sorted(b.lines)


def test_isomorphism_rejects_different_structures():
    assert isomorphism(cyclic_antipodal(2), cyclic_antipodal(3)) is None


def test_mobius_kantor_gf7():
    f = field_new(7)
    pts = mobius_kantor_points(f, omega=3)
    assert len(pts) == 8
    plane = pg2(f)
    pls, ambient = mobius_kantor_pls(plane, omega=3)
    assert len(set(ambient)) == 8
    ap = validate_antipodal(pls)
    assert ap.order == 2


def test_mobius_kantor_matches_cyclic_model():
    # the listed point order realizes the circulant incidence matrix exactly
    for f in (field_new(7), field_new(2, 2), field_new(3)):
        plane = pg2(f)
        pls, _ = mobius_kantor_pls(plane)
        assert sorted(pls.lines) == sorted(cyclic_antipodal(2).lines)


def test_mobius_kantor_gf4_primitive_root():
    f = field_new(2, 2)
    roots = f.solve_monic_quadratic(f.neg(1), 1)
    assert set(roots) == {2, 3}  # the two elements outside GF(2)
    pls, _ = mobius_kantor_pls(pg2(f))
    assert validate_antipodal(pls).order == 2


def test_mobius_kantor_gf5_has_no_root():
    with pytest.raises(NotARootError):
        mobius_kantor_points(field_new(5))


def test_find_good_triangle_order3():
    ap = validate_antipodal(cyclic_antipodal(3))
    a, b, c = find_good_triangle(ap)
    assert is_good_triangle(ap, a, b, c)


def test_find_good_triangle_needs_order3():
    ap = validate_antipodal(cyclic_antipodal(2))
    with pytest.raises(AntipodalError):
        find_good_triangle(ap)


def test_is_good_triangle_rejects_invalid():
    ap = validate_antipodal(cyclic_antipodal(3))
    line = ap.pls.lines[0]
    assert not is_good_triangle(ap, line[0], line[1], line[2])
