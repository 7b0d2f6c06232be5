import pytest

from planecode.antipodal import cyclic_antipodal
from planecode.codes import is_dual_word
from planecode.construct import (
    NotDisjointError,
    NotSecantError,
    NotVerifiedEmbeddingError,
    SameLineError,
    antipodal_diff,
    baer_diff,
    disjoint_baer_pair,
    line_diff,
    subplane_diff,
)
from planecode.field import field_new
from planecode.geometry import baer_subfield_subplane, pg2
from planecode.search import Embedding, embed_search


@pytest.fixture(scope="module")
def pg9():
    return pg2(field_new(3, 2))


@pytest.fixture(scope="module")
def pg25():
    return pg2(field_new(5, 2))


def test_line_diff_weights(pg9, pg25):
    assert line_diff(pg9, 0, 1).weight == 18
    assert line_diff(pg25, 0, 1).weight == 50
    pg4 = pg2(field_new(2, 2))
    w = line_diff(pg4, 2, 17)
    assert w.weight == 8  # attains the 2q upper bound, above q+p=6
    assert is_dual_word(w, pg4)[0]


def test_line_diff_same_line(pg9):
    with pytest.raises(SameLineError):
        line_diff(pg9, 4, 4)


def test_line_diff_normalized_leading_symbol(pg9):
    w = line_diff(pg9, 5, 3)
    assert int(w.values[w.support[0]]) == 1
    raw = line_diff(pg9, 5, 3, raw=True)
    assert raw.weight == w.weight


def test_baer_diff_pg9(pg9):
    sub = baer_subfield_subplane(pg9)
    w = baer_diff(pg9, sub)
    assert w.weight == 15  # 2p^2 - p for p = 3
    assert is_dual_word(w, pg9)[0]
    sizes = sorted(len(v) for v in w.colour_classes().values())
    assert sizes == [6, 9]  # p^2 - p and p^2


def test_baer_diff_pg4_weight():
    pg4 = pg2(field_new(2, 2))
    w = baer_diff(pg4, baer_subfield_subplane(pg4))
    assert w.weight == 6  # 2p^2 - p for p = 2
    assert is_dual_word(w, pg4)[0]


def test_baer_diff_pg25(pg25):
    sub = baer_subfield_subplane(pg25)
    w = baer_diff(pg25, sub)
    assert w.weight == 45
    assert is_dual_word(w, pg25)[0]
    sizes = sorted(len(v) for v in w.colour_classes().values())
    assert sizes == [20, 25]


def test_baer_diff_secant_choice_and_error(pg9):
    sub = baer_subfield_subplane(pg9)
    w0 = baer_diff(pg9, sub)
    w1 = baer_diff(pg9, sub, secant=sub.lines[1])
    assert w0 != w1 and w0.weight == w1.weight == 15
    non_secant = next(l for l in range(pg9.npoints) if l not in set(sub.lines))
    with pytest.raises(NotSecantError):
        baer_diff(pg9, sub, secant=non_secant)


def test_subplane_diff_disjoint_baer_pair(pg9):
    s1, s2 = disjoint_baer_pair(pg9)
    assert not set(s1.points) & set(s2.points)
    w, dual = subplane_diff(pg9, s1, s2)
    assert w.weight == 26
    # two Baer subplanes meet every line in 1 mod p points, so the
    # difference is always orthogonal to every line
    assert dual


def test_subplane_diff_rejects_overlap(pg9):
    sub = baer_subfield_subplane(pg9)
    with pytest.raises(NotDisjointError):
        subplane_diff(pg9, sub, sub)


def test_antipodal_diff_weight16_experiment(pg9):
    mk = cyclic_antipodal(2)
    first = embed_search(mk, pg9).embeddings[0]
    second = embed_search(
        mk, pg9, exclude=frozenset(first.point_map)
    ).embeddings[0]
    w, dual = antipodal_diff(pg9, (mk, first), (mk, second))
    assert w.weight == 16  # 2p^2 - 2p + 4 for p = 3
    assert dual == is_dual_word(w, pg9)[0]


def test_antipodal_diff_rejects_overlapping_images(pg9):
    mk = cyclic_antipodal(2)
    emb = embed_search(mk, pg9).embeddings[0]
    with pytest.raises(NotDisjointError):
        antipodal_diff(pg9, (mk, emb), (mk, emb))


def test_antipodal_diff_rejects_unverified(pg9):
    mk = cyclic_antipodal(2)
    emb = embed_search(mk, pg9).embeddings[0]
    broken = Embedding(tuple([emb.point_map[0]] * 8), emb.line_map)
    with pytest.raises(NotVerifiedEmbeddingError):
        antipodal_diff(pg9, (mk, broken), (mk, emb))
