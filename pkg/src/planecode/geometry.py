"""Projective planes: generation of PG(2,q), ingestion, subplanes, slopes.

A plane of order n is stored as indexed point and line sets (both of size
n^2+n+1) with lines as sorted tuples of point indices.  Generated planes
keep homogeneous coordinates (triples of field element codes, normalized so
the first nonzero coordinate is 1) for points and lines; ingestion accepts
raw incidence rows and validates the plane axioms.

Point and line indexing of generated planes is lexicographic on the
normalized coordinate triples, so two constructions over equal fields are
identical.  Ingested planes keep file order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import Field

INGEST_ORDER_CAP = 49  # validated ingestion is capped at this plane order


class GeometryError(ValueError):
    pass


class BadShapeError(GeometryError):
    pass


class AxiomViolationError(GeometryError):
    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"plane axiom violated ({axiom}): witness {witness}")


class SamePointError(GeometryError):
    pass


class SameLineError(GeometryError):
    pass


class NotGeneratedError(GeometryError):
    pass


class NotSquareOrderError(GeometryError):
    pass


class NotThroughVertexError(GeometryError):
    pass


class TriangleSideError(GeometryError):
    pass


@dataclass(frozen=True)
class SubplaneResult:
    """A subplane: its point set, the ambient lines meeting it in m+1 points, its order."""

    points: tuple[int, ...]
    lines: tuple[int, ...]
    order: int


@dataclass
class SubplaneSearchOutcome:
    subplanes: list[SubplaneResult]
    exhausted: bool
    budget_exceeded: bool
    nodes: int


class Plane:
    """Immutable projective plane of order n; queries are read-only."""

    def __init__(
        self,
        order: int,
        lines: list[tuple[int, ...]],
        source: str,
        field: Field | None = None,
        coords: tuple[tuple[int, int, int], ...] | None = None,
        line_coords: tuple[tuple[int, int, int], ...] | None = None,
    ):
        self.order = order
        self.npoints = order * order + order + 1
        self.lines = tuple(tuple(sorted(l)) for l in lines)
        self.source = source
        self.field = field
        self.coords = coords
        self.line_coords = line_coords
        self._coord_index = (
            {c: i for i, c in enumerate(coords)} if coords is not None else None
        )
        self._validate()
        self.line_sets = tuple(frozenset(l) for l in self.lines)
        self.lines_arr = np.array(self.lines, dtype=np.int32)
        pl: list[list[int]] = [[] for _ in range(self.npoints)]
        for i, l in enumerate(self.lines):
            for pt in l:
                pl[pt].append(i)
        self.point_lines = tuple(tuple(ls) for ls in pl)
        self.point_lines_arr = np.array(self.point_lines, dtype=np.int32)
        self._pair_point: np.ndarray | None = None
        self._pair_line_rows_cache: list | None = None
        self._pair_point_rows_cache: list | None = None

    # -- validation -------------------------------------------------------------

    def _validate(self) -> None:
        n, N = self.order, self.npoints
        if n < 2:
            raise BadShapeError(f"plane order must be >= 2, got {n}")
        if len(self.lines) != N:
            raise BadShapeError(f"expected {N} lines, got {len(self.lines)}")
        degrees = np.zeros(N, dtype=np.int64)
        pair_line = np.full((N, N), -1, dtype=np.int32)
        for i, l in enumerate(self.lines):
            if len(l) != n + 1 or len(set(l)) != n + 1:
                raise AxiomViolationError("line size", (i, l))
            idx = np.fromiter(l, dtype=np.int64)
            if idx.min() < 0 or idx.max() >= N:
                raise BadShapeError(f"line {i} has out-of-range point index")
            block = pair_line[np.ix_(idx, idx)].copy()
            np.fill_diagonal(block, -1)
            hit = np.argwhere(block >= 0)
            if hit.size:
                a, b = int(idx[hit[0][0]]), int(idx[hit[0][1]])
                raise AxiomViolationError(
                    "two lines through two points", (a, b, int(pair_line[a, b]), i)
                )
            pair_line[np.ix_(idx, idx)] = i
            degrees[idx] += 1
        np.fill_diagonal(pair_line, -1)
        if (degrees != n + 1).any():
            bad = int(np.flatnonzero(degrees != n + 1)[0])
            raise AxiomViolationError("point degree", (bad, int(degrees[bad])))
        uncovered = np.argwhere(pair_line < 0)
        uncovered = uncovered[uncovered[:, 0] != uncovered[:, 1]]
        if uncovered.size:
            a, b = map(int, uncovered[0])
            raise AxiomViolationError("two points on no common line", (a, b))
        # Every pair of points now lies on exactly one line and all degrees are
        # n+1, so the (line pair, common point) incidences number
        # N*C(n+1,2) = C(N,2): any two lines meet in exactly one point.
        self.pair_line = pair_line

    # -- queries ----------------------------------------------------------------

    def is_incident(self, point: int, line: int) -> bool:
        return point in self.line_sets[line]

    def line_through(self, p: int, q: int) -> int:
        if p == q:
            raise SamePointError(f"line_through needs two distinct points, got {p}")
        return int(self.pair_line[p, q])

    def _build_pair_point(self) -> np.ndarray:
        N = self.npoints
        t = np.full((N, N), -1, dtype=np.int32)
        for pt, ls in enumerate(self.point_lines):
            idx = np.fromiter(ls, dtype=np.int64)
            t[np.ix_(idx, idx)] = pt
        np.fill_diagonal(t, -1)
        return t

    def meet(self, l1: int, l2: int) -> int:
        if l1 == l2:
            raise SameLineError(f"meet needs two distinct lines, got {l1}")
        if self._pair_point is None:
            self._pair_point = self._build_pair_point()
        return int(self._pair_point[l1, l2])

    def pair_line_rows(self) -> list:
        """pair_line as nested lists, for hot pure-Python loops."""
        if self._pair_line_rows_cache is None:
            self._pair_line_rows_cache = self.pair_line.tolist()
        return self._pair_line_rows_cache

    def pair_point_rows(self) -> list:
        if self._pair_point is None:
            self._pair_point = self._build_pair_point()
        if self._pair_point_rows_cache is None:
            self._pair_point_rows_cache = self._pair_point.tolist()
        return self._pair_point_rows_cache

    def point_index(self, coord: tuple[int, int, int]) -> int:
        if self._coord_index is None:
            raise NotGeneratedError("plane has no coordinates")
        return self._coord_index[coord]

    def __repr__(self) -> str:
        return f"Plane(order={self.order}, source={self.source!r})"


def _normalize(f: Field, v: tuple[int, int, int]) -> tuple[int, int, int]:
    for i in range(3):
        if v[i] != 0:
            s = f.inv(v[i])
            return (f.mul(s, v[0]), f.mul(s, v[1]), f.mul(s, v[2]))
    raise GeometryError("zero vector has no projective normalization")


def pg2(field: Field) -> Plane:
    """The Desarguesian plane PG(2,q) with deterministic lexicographic indexing."""
    q = field.q
    pts: list[tuple[int, int, int]] = [(0, 0, 1)]
    pts += [(0, 1, z) for z in range(q)]
    pts += [(1, y, z) for y in range(q) for z in range(q)]
    index = {c: i for i, c in enumerate(pts)}

    duals: list[tuple[int, int, int]] = [(0, 0, 1)]
    duals += [(0, 1, z) for z in range(q)]
    duals += [(1, y, z) for y in range(q) for z in range(q)]

    neg = field.neg
    lines = []
    for a, b, c in duals:
        # kernel basis of a*x + b*y + c*z = 0
        if a == 1:
            v1, v2 = (neg(b), 1, 0), (neg(c), 0, 1)
        elif b == 1:
            v1, v2 = (1, 0, 0), (0, neg(c), 1)
        else:
            v1, v2 = (1, 0, 0), (0, 1, 0)
        members = [index[_normalize(field, v2)]]
        for t in range(q):
            w = (
                field.add(field.mul(t, v2[0]), v1[0]),
                field.add(field.mul(t, v2[1]), v1[1]),
                field.add(field.mul(t, v2[2]), v1[2]),
            )
            members.append(index[_normalize(field, w)])
        lines.append(tuple(sorted(members)))

    return Plane(
        q,
        lines,
        "generated",
        field=field,
        coords=tuple(pts),
        line_coords=tuple(duals),
    )


def plane_from_incidence(rows: list[list[int]], n: int) -> Plane:
    """Build a validated plane of order n from raw point-index rows (one per line)."""
    if n > INGEST_ORDER_CAP:
        raise BadShapeError(f"ingestion is capped at order {INGEST_ORDER_CAP}, got {n}")
    return Plane(n, [tuple(r) for r in rows], "ingested")


# -- subplanes -------------------------------------------------------------------


def baer_subfield_subplane(plane: Plane) -> SubplaneResult:
    """The subplane of points with coordinates in the index-2 subfield.

    For a generated PG(2,p^(2d)) this is the canonical Baer subplane of
    order p^d: the points whose normalized coordinates are fixed by the
    half-order Frobenius.
    """
    if plane.source != "generated" or plane.field is None:
        raise NotGeneratedError("baer_subfield_subplane needs a generated plane")
    f = plane.field
    if f.h % 2 != 0:
        raise NotSquareOrderError(f"order {plane.order} is not a square of a subfield order")
    d = f.h // 2
    m = f.p**d
    pts = [
        i for i, c in enumerate(plane.coords) if all(f.in_subfield(x, d) for x in c)
    ]
    sub_lines = [
        i for i, l in enumerate(plane.line_sets) if len(l.intersection(pts)) == m + 1
    ]
    res = SubplaneResult(tuple(pts), tuple(sub_lines), m)
    check_subplane(plane, res)
    return res


def check_subplane(plane: Plane, sub: SubplaneResult) -> None:
    """Raise unless the restricted incidence is a projective plane of order m."""
    m = sub.order
    pts = set(sub.points)
    if len(pts) != m * m + m + 1 or len(sub.lines) != m * m + m + 1:
        raise GeometryError(f"not a subplane of order {m}: wrong sizes")
    for l in sub.lines:
        if len(plane.line_sets[l].intersection(pts)) != m + 1:
            raise GeometryError(f"line {l} does not meet the subplane in {m + 1} points")
    for l in range(plane.npoints):
        k = len(plane.line_sets[l].intersection(pts))
        if k > 1 and l not in sub.lines:
            raise GeometryError(f"line {l} meets the subplane in {k} points but is not listed")


def _closure(
    pair_line: list,
    pair_point: list,
    seed: tuple[int, int, int, int],
    cap: int,
    min_point: int,
) -> frozenset | None:
    """Close a quadrangle under join/meet.

    Returns None if the closure escapes the size cap (cap points or cap
    spanned lines) or produces a point below min_point (that closure is
    reachable from an earlier seed).
    """
    pts = set(seed)
    while True:
        spanned: set[int] = set()
        plist = sorted(pts)
        for i, a in enumerate(plist):
            row = pair_line[a]
            for b in plist[i + 1:]:
                spanned.add(row[b])
            if len(spanned) > cap:
                return None
        if len(spanned) > cap:
            return None
        new: set[int] = set()
        llist = sorted(spanned)
        for i, l1 in enumerate(llist):
            row = pair_point[l1]
            for l2 in llist[i + 1:]:
                x = row[l2]
                if x not in pts and x not in new:
                    if x < min_point:
                        return None
                    new.add(x)
                    if len(pts) + len(new) > cap:
                        return None
        if not new:
            return frozenset(pts)
        pts |= new


def subplane_result_from_points(plane: Plane, pts: frozenset, m: int) -> SubplaneResult | None:
    """Validate a candidate point set as a subplane of order m; None if it is not one."""
    if len(pts) != m * m + m + 1:
        return None
    secants = []
    for l, ls in enumerate(plane.line_sets):
        k = len(ls & pts)
        if k > 1:
            if k != m + 1:
                return None
            secants.append(l)
    if len(secants) != m * m + m + 1:
        return None
    deg = {p: 0 for p in pts}
    for l in secants:
        for p in plane.line_sets[l] & pts:
            deg[p] += 1
    if any(d != m + 1 for d in deg.values()):
        return None
    return SubplaneResult(tuple(sorted(pts)), tuple(secants), m)


def subplane_search(
    plane: Plane, m: int, limit: int = 10, budget: int = 10**8
) -> SubplaneSearchOutcome:
    """Find subplanes of order m by quadrangle closures.

    Enumerates 4-point seeds with no 3 collinear, closes each under
    join/meet, and accepts closures of exactly m^2+m+1 points that satisfy
    the subplane axioms.  Complete for subplanes generated by one of their
    quadrangles (all prime m in particular); the min-point prune only skips
    closures rediscovered from a later seed.
    """
    if m < 2:
        raise GeometryError("subplane order must be >= 2")
    cap = m * m + m + 1
    T = plane.pair_line_rows()
    M = plane.pair_point_rows()
    N = plane.npoints
    found: dict[frozenset, SubplaneResult] = {}
    nodes = 0

    for a in range(N):
        Ta = T[a]
        for b in range(a + 1, N):
            lab = Ta[b]
            Tb = T[b]
            for c in range(b + 1, N):
                if Ta[c] == lab:
                    continue
                lac, lbc = Ta[c], Tb[c]
                for d in range(c + 1, N):
                    if Ta[d] == lab or Ta[d] == lac or Tb[d] == lbc:
                        continue
                    nodes += 1
                    if nodes > budget:
                        return SubplaneSearchOutcome(list(found.values()), False, True, nodes)
                    cl = _closure(T, M, (a, b, c, d), cap, a)
                    if cl is None or cl in found:
                        continue
                    res = subplane_result_from_points(plane, cl, m)
                    if res is not None:
                        found[cl] = res
                        if len(found) >= limit:
                            return SubplaneSearchOutcome(
                                list(found.values()), False, False, nodes
                            )
    return SubplaneSearchOutcome(list(found.values()), True, False, nodes)


# -- slopes, Menelaos, Ceva -------------------------------------------------------


def fundamental_triangle(plane: Plane) -> tuple[int, int, int]:
    """Indices of (1,0,0), (0,1,0), (0,0,1) in a generated plane."""
    if plane.source != "generated":
        raise NotGeneratedError("slopes need a generated plane")
    return (
        plane.point_index((1, 0, 0)),
        plane.point_index((0, 1, 0)),
        plane.point_index((0, 0, 1)),
    )


def slope_from_coords(f: Field, vertex: int, pt: tuple[int, int, int]) -> int:
    """Slope at A_vertex of the line joining A_vertex to pt (pt off the sides).

    Conventions: lines through A1 are X3 = t1*X2, through A2 are X1 = t2*X3,
    through A3 are X2 = t3*X1.  Triangle sides have no slope.
    """
    x1, x2, x3 = pt
    num, den = ((x3, x2), (x1, x3), (x2, x1))[vertex - 1]
    if den == 0 or num == 0:
        raise TriangleSideError("point lies on a side of the fundamental triangle")
    return f.div(num, den)


def slope(plane: Plane, vertex: int, line: int) -> int:
    """Slope of a line of a generated plane through A1, A2 or A3."""
    f = plane.field
    if f is None:
        raise NotGeneratedError("slopes need a generated plane")
    if vertex not in (1, 2, 3):
        raise GeometryError(f"vertex must be 1, 2 or 3, got {vertex}")
    a1, a2, a3 = fundamental_triangle(plane)
    v = (a1, a2, a3)[vertex - 1]
    if v not in plane.line_sets[line]:
        raise NotThroughVertexError(f"line {line} does not pass through A{vertex}")
    other = next(p for p in plane.lines[line] if p != v)
    return slope_from_coords(f, vertex, plane.coords[other])


def menelaos_product(plane: Plane, line: int) -> int:
    """Product of the three slopes cut by a line avoiding the triangle; equals -1."""
    f = plane.field
    a1, a2, a3 = fundamental_triangle(plane)
    ls = plane.line_sets[line]
    if a1 in ls or a2 in ls or a3 in ls:
        raise NotThroughVertexError("transversal line must avoid A1, A2, A3")
    b1 = plane.meet(line, plane.line_through(a2, a3))
    b2 = plane.meet(line, plane.line_through(a1, a3))
    b3 = plane.meet(line, plane.line_through(a1, a2))
    t1 = slope(plane, 1, plane.line_through(a1, b1))
    t2 = slope(plane, 2, plane.line_through(a2, b2))
    t3 = slope(plane, 3, plane.line_through(a3, b3))
    return f.mul(f.mul(t1, t2), t3)


def ceva_product(plane: Plane, point: int) -> int:
    """Product of the three cevian slopes through a point off the sides; equals 1."""
    f = plane.field
    a1, a2, a3 = fundamental_triangle(plane)
    sides = (
        plane.line_through(a2, a3),
        plane.line_through(a1, a3),
        plane.line_through(a1, a2),
    )
    if any(point in plane.line_sets[s] for s in sides):
        raise TriangleSideError("point lies on a side of the fundamental triangle")
    t1 = slope(plane, 1, plane.line_through(a1, point))
    t2 = slope(plane, 2, plane.line_through(a2, point))
    t3 = slope(plane, 3, plane.line_through(a3, point))
    return f.mul(f.mul(t1, t2), t3)
