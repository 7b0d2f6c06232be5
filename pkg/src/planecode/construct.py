"""Constructions of dual code words from geometric ingredients.

Recipes: difference of two lines (weight 2n, always dual), difference of a
Baer subplane and one of its secant lines (weight 2p^2-p, always dual),
difference of two disjoint subplanes, and difference of two disjointly
embedded antipodal planes.  The last two compute their dual flag by a full
orthogonality check and never assert it.

Constructed words are scaled so the lowest-index nonzero symbol is 1
(raw=True skips that), since everything downstream works up to scalars.
"""

from __future__ import annotations

from .antipodal import PartialLinearSpace
from .codes import CodeWord, indicator, is_dual_word, word_diff
from .geometry import Plane, SubplaneResult
from .search import Embedding, verify_embedding


class ConstructError(ValueError):
    pass


class SameLineError(ConstructError):
    pass


class NotSecantError(ConstructError):
    pass


class NotDisjointError(ConstructError):
    pass


class NotVerifiedEmbeddingError(ConstructError):
    pass


def _scaled(w: CodeWord, plane: Plane, raw: bool) -> CodeWord:
    if raw or w.weight == 0:
        return w
    lead = int(w.values[w.support[0]])
    return w.scale(pow(lead, w.p - 2, w.p))


def _plane_prime(plane: Plane) -> int:
    n = plane.order
    p = 2
    while n % p:
        p += 1
    return p


def line_diff(plane: Plane, l1: int, l2: int, raw: bool = False) -> CodeWord:
    """Difference of two line indicator vectors: a dual word of weight 2n."""
    if l1 == l2:
        raise SameLineError("line_diff needs two distinct lines")
    p = _plane_prime(plane)
    w = word_diff(
        indicator(plane.lines[l1], plane.npoints, p),
        indicator(plane.lines[l2], plane.npoints, p),
    )
    assert w.weight == 2 * plane.order
    ok, _ = is_dual_word(w, plane)
    assert ok, "difference of two lines must be orthogonal to every line"
    return _scaled(w, plane, raw)


def baer_diff(
    plane: Plane,
    sub: SubplaneResult,
    secant: int | None = None,
    raw: bool = False,
) -> CodeWord:
    """Difference of a Baer subplane and one of its secants: weight 2p^2-p."""
    p = _plane_prime(plane)
    if plane.order != sub.order * sub.order:
        raise NotSecantError(
            f"subplane of order {sub.order} is not a Baer subplane of a plane of order {plane.order}"
        )
    if secant is None:
        secant = sub.lines[0]  # lexicographically first secant
    if len(plane.line_sets[secant] & set(sub.points)) != sub.order + 1:
        raise NotSecantError(f"line {secant} is not a secant of the subplane")
    w = word_diff(
        indicator(sub.points, plane.npoints, p),
        indicator(plane.lines[secant], plane.npoints, p),
    )
    ok, _ = is_dual_word(w, plane)
    assert ok, "Baer-minus-secant must be orthogonal to every line"
    return _scaled(w, plane, raw)


def subplane_diff(
    plane: Plane,
    sub1: SubplaneResult,
    sub2: SubplaneResult,
    raw: bool = False,
) -> tuple[CodeWord, bool]:
    """Difference of two disjoint subplane indicators; dual flag is computed,
    not assumed (disjointness alone does not force duality)."""
    s1, s2 = set(sub1.points), set(sub2.points)
    if s1 & s2:
        raise NotDisjointError(f"subplanes share points {sorted(s1 & s2)[:4]}")
    p = _plane_prime(plane)
    w = word_diff(
        indicator(sub1.points, plane.npoints, p),
        indicator(sub2.points, plane.npoints, p),
    )
    dual, _ = is_dual_word(w, plane)
    return _scaled(w, plane, raw), dual


def antipodal_diff(
    plane: Plane,
    first: tuple[PartialLinearSpace, Embedding],
    second: tuple[PartialLinearSpace, Embedding],
    raw: bool = False,
) -> tuple[CodeWord, bool]:
    """Difference of the point images of two disjointly embedded antipodal
    planes; dual flag computed by the full orthogonality check."""
    for pls, emb in (first, second):
        ok, witness = verify_embedding(pls, plane, emb)
        if not ok:
            raise NotVerifiedEmbeddingError(f"embedding fails verification: {witness}")
    pts1 = set(first[1].point_map)
    pts2 = set(second[1].point_map)
    if pts1 & pts2:
        raise NotDisjointError(f"embeddings share points {sorted(pts1 & pts2)[:4]}")
    p = _plane_prime(plane)
    w = word_diff(
        indicator(sorted(pts1), plane.npoints, p),
        indicator(sorted(pts2), plane.npoints, p),
    )
    dual, _ = is_dual_word(w, plane)
    return _scaled(w, plane, raw), dual


def disjoint_baer_pair(
    plane: Plane, budget: int = 10**7
) -> tuple[SubplaneResult, SubplaneResult]:
    """A pair of disjoint Baer subplanes, found by closing quadrangles that
    avoid the subfield Baer subplane."""
    from .geometry import baer_subfield_subplane, subplane_result_from_points, _closure

    base = baer_subfield_subplane(plane)
    m = base.order
    cap = m * m + m + 1
    avoid = set(base.points)
    pool = [x for x in range(plane.npoints) if x not in avoid]
    T = plane.pair_line_rows()
    M = plane.pair_point_rows()
    nodes = 0
    for i, a in enumerate(pool):
        for j in range(i + 1, len(pool)):
            b = pool[j]
            lab = T[a][b]
            for k in range(j + 1, len(pool)):
                c = pool[k]
                if T[a][c] == lab:
                    continue
                for l in range(k + 1, len(pool)):
                    d = pool[l]
                    if T[a][d] == lab or T[a][d] == T[a][c] or T[b][d] == T[b][c]:
                        continue
                    nodes += 1
                    if nodes > budget:
                        raise ConstructError("no disjoint Baer pair within budget")
                    cl = _closure(T, M, (a, b, c, d), cap, 0)
                    if cl is None or cl & avoid:
                        continue
                    sub = subplane_result_from_points(plane, cl, m)
                    if sub is not None:
                        return base, sub
    raise ConstructError("no disjoint Baer subplane pair found")
