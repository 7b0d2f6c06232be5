import itertools

import numpy as np
import pytest

from planecode.codes import (
    BudgetExceededError,
    CodeWord,
    LengthMismatchError,
    PrimeMismatchError,
    code_of_plane,
    dual_basis,
    enumerate_min_weight,
    incidence_matrix,
    indicator,
    is_dual_word,
    line_restriction_mu,
    nullspace_mod_p,
    rref_mod_p,
    word_diff,
)
from planecode.field import field_new
from planecode.geometry import pg2


@pytest.fixture(scope="module")
def planes():
    return {q: pg2(field_new(p, h)) for q, (p, h) in
            {2: (2, 1), 3: (3, 1), 4: (2, 2), 8: (2, 3), 9: (3, 2)}.items()}


def brute_force_words(generator, p):
    """Independent enumeration oracle: plain python over all messages."""
    k, n = generator.shape
    rows = [tuple(int(x) for x in r) for r in generator]
    for msg in itertools.product(range(p), repeat=k):
        w = [0] * n
        for m, row in zip(msg, rows):
            if m:
                w = [(a + m * b) % p for a, b in zip(w, row)]
        yield tuple(w)


def test_rref_small_known():
    m = np.array([[1, 2, 0], [2, 4, 1], [0, 0, 1]])
    r, piv = rref_mod_p(m, 5)
    assert piv == [0, 2]
    assert np.array_equal(r, np.array([[1, 2, 0], [0, 0, 1]]))


def test_nullspace_is_kernel():
    rng = np.random.default_rng(3)
    for p in (2, 3, 5):
        m = rng.integers(0, p, size=(6, 10))
        ns = nullspace_mod_p(m, p)
        assert not ((m @ ns.T) % p).any()
        _, piv = rref_mod_p(m, p)
        assert ns.shape[0] == 10 - len(piv)


@pytest.mark.parametrize(
    "q,p,dim", [(2, 2, 4), (3, 3, 7), (4, 2, 10), (8, 2, 28), (9, 3, 37)]
)
def test_code_dimension_formula(planes, q, p, dim):
    assert code_of_plane(planes[q], p).dimension == dim


def test_prime_mismatch(planes):
    with pytest.raises(PrimeMismatchError):
        code_of_plane(planes[9], 2)
    code_of_plane(planes[9], 2, allow_prime_mismatch=True)


@pytest.mark.parametrize("q,p,ddim", [(2, 2, 3), (4, 2, 11), (9, 3, 54)])
def test_dual_dimension(planes, q, p, ddim):
    code = code_of_plane(planes[q], p)
    dual = dual_basis(code)
    assert dual.dimension == ddim
    assert not ((code.generator @ dual.generator.T) % p).any()


def test_is_dual_word_zero(planes):
    plane = planes[3]
    zero = CodeWord(3, np.zeros(13, dtype=np.int64))
    assert is_dual_word(zero, plane) == (True, None)


def test_is_dual_word_single_line_fails_with_witness(planes):
    plane = planes[3]
    w = indicator(plane.lines[5], 13, 3)
    ok, witness = is_dual_word(w, plane)
    assert not ok
    assert witness is not None
    # the witness line meets the support in a number of points not divisible by 3
    assert len(plane.line_sets[witness] & set(w.support.tolist())) % 3 != 0


def test_difference_of_two_lines_is_dual(planes):
    for q, p in ((2, 2), (3, 3), (4, 2), (9, 3)):
        plane = planes[q]
        w = word_diff(
            indicator(plane.lines[0], plane.npoints, p),
            indicator(plane.lines[1], plane.npoints, p),
        )
        assert is_dual_word(w, plane)[0]
        assert w.weight == 2 * plane.order


def test_length_mismatch(planes):
    w = CodeWord(3, np.zeros(7, dtype=np.int64))
    with pytest.raises(LengthMismatchError):
        is_dual_word(w, planes[3])


def test_enumerate_c22_minimum_weight_words_are_lines(planes):
    plane = planes[2]
    res = enumerate_min_weight(code_of_plane(plane, 2))
    assert res.min_weight == 3
    expected = sorted(tuple(indicator(l, 7, 2).values) for l in plane.lines)
    assert [tuple(w.values) for w in res.words] == expected


def test_enumerate_c22_matches_brute_force(planes):
    code = code_of_plane(planes[2], 2)
    oracle = {w for w in brute_force_words(code.generator, 2) if any(w)}
    omin = min(sum(1 for x in w if x) for w in oracle)
    res = enumerate_min_weight(code)
    assert res.min_weight == omin == 3
    assert {tuple(w.values) for w in res.words} == {
        w for w in oracle if sum(1 for x in w if x) == omin
    }


def test_enumerate_c23_scalar_multiples_of_lines(planes):
    plane = planes[3]
    res = enumerate_min_weight(code_of_plane(plane, 3))
    assert res.min_weight == 4
    assert len(res.words) == 2 * 13
    lines = {tuple(indicator(l, 13, 3).values) for l in plane.lines}
    doubles = {tuple(indicator(l, 13, 3).scale(2).values) for l in plane.lines}
    assert {tuple(w.values) for w in res.words} == lines | doubles


def test_enumerate_dual_min_weights(planes):
    res2 = enumerate_min_weight(dual_basis(code_of_plane(planes[2], 2)))
    assert res2.min_weight == 4 and res2.words_checked == 8
    res3 = enumerate_min_weight(dual_basis(code_of_plane(planes[3], 3)))
    assert res3.min_weight == 6 and res3.words_checked == 729
    res4 = enumerate_min_weight(dual_basis(code_of_plane(planes[4], 2)))
    assert res4.min_weight == 6 and res4.words_checked == 2048


def test_enumerate_c23_dual_matches_brute_force(planes):
    dual = dual_basis(code_of_plane(planes[3], 3))
    oracle_min = min(
        sum(1 for x in w if x)
        for w in brute_force_words(dual.generator, 3)
        if any(w)
    )
    assert enumerate_min_weight(dual).min_weight == oracle_min == 6


def test_enumerate_budget(planes):
    code = code_of_plane(planes[9], 3)
    with pytest.raises(BudgetExceededError):
        enumerate_min_weight(code, budget=1000)


def random_dual_word(plane, p, rng):
    dual = dual_basis(code_of_plane(plane, p))
    coeffs = rng.integers(0, p, size=dual.dimension)
    return CodeWord(p, (coeffs @ dual.generator) % p)


@pytest.mark.parametrize("q,p", [(4, 2), (9, 3)])
def test_mu_identities_on_random_dual_words(planes, q, p):
    plane = planes[q]
    rng = np.random.default_rng(0)
    dual = dual_basis(code_of_plane(plane, p))
    for _ in range(50):
        coeffs = rng.integers(0, p, size=dual.dimension)
        w = CodeWord(p, (coeffs @ dual.generator) % p)
        assert w.mu() + w.neg().mu() == p * w.weight
        assert w.mu() % p == 0
        for line in range(plane.npoints):
            assert line_restriction_mu(w, plane, line) % p == 0


def test_indicator_of_baer_subplane_weight(planes):
    from planecode.geometry import baer_subfield_subplane

    sub = baer_subfield_subplane(planes[9])
    w = indicator(sub.points, 91, 3)
    assert w.weight == 13


def test_word_diff_self_is_zero(planes):
    plane = planes[4]
    w = indicator(plane.lines[3], 21, 2)
    assert word_diff(w, w).weight == 0


def test_colour_classes():
    w = CodeWord(5, np.array([0, 1, 4, 1, 0, 3]))
    classes = w.colour_classes()
    assert set(classes) == {1, 3, 4}
    assert classes[1].tolist() == [1, 3]


def test_incidence_matrix_rows_are_lines(planes):
    plane = planes[2]
    a = incidence_matrix(plane)
    for i, l in enumerate(plane.lines):
        assert np.flatnonzero(a[i]).tolist() == list(l)
