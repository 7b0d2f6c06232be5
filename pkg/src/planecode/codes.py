"""Exact GF(p) linear algebra for plane codes.

The p-ary code of a plane is the row space of its line-point incidence
matrix over GF(p).  Codes are stored as reduced-row-echelon generator
matrices (numpy int64 residues); code words are residue vectors with a
cached support.  Minimum weights of tiny codes are found by exhausting the
message space in vectorized chunks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import is_prime
from .geometry import Plane

DEFAULT_ENUM_BUDGET = 2**24


class CodesError(ValueError):
    pass


class PrimeMismatchError(CodesError):
    pass


class LengthMismatchError(CodesError):
    pass


class BudgetExceededError(CodesError):
    def __init__(self, k: int, p: int, budget: int):
        self.k, self.p, self.budget = k, p, budget
        super().__init__(
            f"enumerating p^k = {p}^{k} words exceeds the budget of {budget}; "
            "use construction-based bounds instead"
        )


def _mod_inverse(a: int, p: int) -> int:
    return pow(a, p - 2, p)


def rref_mod_p(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p); returns (rref, pivot columns)."""
    m = np.array(mat, dtype=np.int64) % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * _mod_inverse(int(m[r, c]), p)) % p
        col = m[:, c].copy()
        col[r] = 0
        m -= np.outer(col, m[r])
        m %= p
        pivots.append(c)
        r += 1
    return m[: len(pivots)], pivots


def nullspace_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """A basis (rows) of the right kernel of mat over GF(p)."""
    m = np.asarray(mat)
    cols = m.shape[1]
    rref, pivots = rref_mod_p(m, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fcol in enumerate(free):
        basis[i, fcol] = 1
        for row, pcol in zip(rref, pivots):
            basis[i, pcol] = (-row[fcol]) % p
    return basis


class CodeWord:
    """A vector over GF(p) indexed by plane points, with a sparse support view."""

    __slots__ = ("p", "values", "_support")

    def __init__(self, p: int, values: np.ndarray):
        self.p = p
        self.values = np.asarray(values, dtype=np.int64) % p
        self.values.flags.writeable = False
        self._support: np.ndarray | None = None

    @property
    def length(self) -> int:
        return int(self.values.shape[0])

    @property
    def support(self) -> np.ndarray:
        if self._support is None:
            self._support = np.flatnonzero(self.values)
        return self._support

    @property
    def weight(self) -> int:
        return int(self.support.size)

    def mu(self) -> int:
        """Sum of the symbols as integers (representatives in [0,p))."""
        return int(self.values.sum())

    def neg(self) -> "CodeWord":
        return CodeWord(self.p, (-self.values) % self.p)

    def scale(self, lam: int) -> "CodeWord":
        return CodeWord(self.p, (self.values * (lam % self.p)) % self.p)

    def colour_classes(self) -> dict[int, np.ndarray]:
        """Map colour -> positions carrying that symbol, for colours 1..p-1."""
        out = {}
        for lam in range(1, self.p):
            pos = np.flatnonzero(self.values == lam)
            if pos.size:
                out[lam] = pos
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CodeWord)
            and self.p == other.p
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"CodeWord(p={self.p}, len={self.length}, weight={self.weight})"


def word_diff(v1: CodeWord, v2: CodeWord) -> CodeWord:
    if v1.p != v2.p or v1.length != v2.length:
        raise LengthMismatchError("word arithmetic needs matching p and length")
    return CodeWord(v1.p, (v1.values - v2.values) % v1.p)


def indicator(points, length: int, p: int) -> CodeWord:
    v = np.zeros(length, dtype=np.int64)
    v[list(points)] = 1
    return CodeWord(p, v)


@dataclass(frozen=True)
class LinearCode:
    """A code given by a full-rank RREF generator matrix."""

    p: int
    length: int
    generator: np.ndarray  # k x length, RREF

    @property
    def dimension(self) -> int:
        return int(self.generator.shape[0])

    def __repr__(self) -> str:
        return f"LinearCode(p={self.p}, length={self.length}, dim={self.dimension})"


def incidence_matrix(plane: Plane) -> np.ndarray:
    """Line-by-point 0/1 incidence matrix."""
    N = plane.npoints
    a = np.zeros((N, N), dtype=np.int64)
    rows = np.repeat(np.arange(N), plane.order + 1)
    a[rows, plane.lines_arr.ravel()] = 1
    return a


def code_of_plane(plane: Plane, p: int, allow_prime_mismatch: bool = False) -> LinearCode:
    """The p-ary code of the plane: GF(p)-span of the incidence rows."""
    if not is_prime(p):
        raise CodesError(f"p must be prime, got {p}")
    n = plane.order
    while n % p == 0:
        n //= p
    if n != 1 and not allow_prime_mismatch:
        raise PrimeMismatchError(
            f"plane order {plane.order} is not a power of {p}; "
            "pass allow_prime_mismatch=True to proceed anyway"
        )
    rref, pivots = rref_mod_p(incidence_matrix(plane), p)
    return LinearCode(p, plane.npoints, rref)


def dual_basis(code: LinearCode) -> LinearCode:
    """The dual code, as an RREF basis; orthogonality is verified."""
    basis = nullspace_mod_p(code.generator, code.p)
    rref, _ = rref_mod_p(basis, code.p)
    if rref.shape[0] != code.length - code.dimension:
        raise CodesError("dual basis has wrong dimension")  # pragma: no cover
    if ((code.generator @ rref.T) % code.p).any():
        raise CodesError("dual basis is not orthogonal to the code")  # pragma: no cover
    return LinearCode(code.p, code.length, rref)


def is_dual_word(w: CodeWord, plane: Plane) -> tuple[bool, int | None]:
    """True iff every line's dot product with w vanishes; witness line on False."""
    if w.length != plane.npoints:
        raise LengthMismatchError(
            f"word length {w.length} does not match plane with {plane.npoints} points"
        )
    sums = w.values[plane.lines_arr].sum(axis=1) % w.p
    bad = np.flatnonzero(sums)
    if bad.size:
        return False, int(bad[0])
    return True, None


def line_restriction_mu(w: CodeWord, plane: Plane, line: int) -> int:
    """mu of the restriction of w to a line."""
    return int(w.values[plane.lines_arr[line]].sum())


@dataclass
class MinWeightResult:
    min_weight: int
    words: list[CodeWord]
    words_checked: int


def enumerate_min_weight(
    code: LinearCode, budget: int = DEFAULT_ENUM_BUDGET
) -> MinWeightResult:
    """Exact minimum nonzero weight by full enumeration of the message space.

    Words are generated in vectorized chunks of messages; the returned list
    holds every minimum-weight word, sorted lexicographically by values.
    """
    p, k, n = code.p, code.dimension, code.length
    if k == 0:
        raise CodesError("the zero code has no nonzero words")
    total = p**k
    if total > budget:
        raise BudgetExceededError(k, p, budget)
    gen = code.generator
    chunk = 1 << 14
    best = n + 1
    found: list[np.ndarray] = []
    powers = p ** np.arange(k, dtype=np.int64)
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        msgs = (np.arange(start, stop, dtype=np.int64)[:, None] // powers[None, :]) % p
        words = (msgs @ gen) % p
        weights = np.count_nonzero(words, axis=1)
        if start == 0:
            weights[0] = n + 1  # skip the zero word
        wmin = int(weights.min())
        if wmin < best:
            best = wmin
            found = []
        if wmin <= best:
            found.extend(words[weights == best])
    found_sorted = sorted((tuple(v) for v in found))
    return MinWeightResult(
        best,
        [CodeWord(p, np.array(v, dtype=np.int64)) for v in found_sorted],
        total,
    )
