"""Exact arithmetic in small Galois fields GF(p^h).

Elements are plain integers in [0, p^h): the code of an element with
coefficient vector (c_0, ..., c_{h-1}) (low degree first, residues mod p)
is sum(c_i * p**i).  All ordering and hashing derives from this encoding.
The zero and one elements are the codes 0 and 1.

Multiplication reduces modulo a monic irreducible polynomial of degree h.
If no modulus is given, the default is the irreducible polynomial whose
coefficient vector has the smallest code, so constructions are reproducible
across runs and platforms.

Fields up to 4096 elements get full lookup tables; larger fields (allowed
up to 2**16 elements) fall back to per-operation polynomial arithmetic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

_TABLE_LIMIT = 4096
_ORDER_LIMIT = 1 << 16


class FieldError(ValueError):
    """Base class for field construction/arithmetic errors."""


class NotPrimeError(FieldError):
    pass


class ReducibleModulusError(FieldError):
    pass


class DivisionByZeroError(FieldError, ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m, coefficients mod p."""
    a = [x % p for x in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    del a[dm:]
    while len(a) < dm:
        a.append(0)
    return a


def _poly_mul_mod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, m, p)


def _poly_divides(d: Sequence[int], f: Sequence[int], p: int) -> bool:
    """True if the monic polynomial d divides f over GF(p)."""
    r = [x % p for x in f]
    dd = len(d) - 1
    while len(_poly_trim(list(r))) - 1 >= dd and any(r):
        r = _poly_trim(r)
        if len(r) - 1 < dd:
            break
        c = r[-1]
        shift = len(r) - 1 - dd
        for j in range(dd + 1):
            r[shift + j] = (r[shift + j] - c * d[j]) % p
        r = _poly_trim(r)
        if not r:
            return True
    return not _poly_trim(list(r))


def _monic_polys(p: int, deg: int) -> Iterable[list[int]]:
    """All monic polynomials of the given degree, ordered by coefficient code."""
    for code in range(p**deg):
        c, rest = [], code
        for _ in range(deg):
            c.append(rest % p)
            rest //= p
        yield c + [1]


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    deg = len(f) - 1
    if deg == 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if _poly_divides(g, f, p):
                return False
    return True


def _default_modulus(p: int, h: int) -> tuple[int, ...]:
    if h == 1:
        return (0, 1)
    for f in _monic_polys(p, h):
        if _is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {h} over GF({p})")  # unreachable


class Field:
    """GF(p^h) with a fixed monic irreducible modulus; immutable."""

    __slots__ = (
        "p", "h", "q", "modulus",
        "_mul_t", "_add_t", "_neg_t", "_inv_t",
    )

    def __init__(self, p: int, h: int = 1, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrimeError(f"p must be a prime integer, got {p!r}")
        if not isinstance(h, int) or h < 1:
            raise FieldError(f"h must be a positive integer, got {h!r}")
        q = p**h
        if q > _ORDER_LIMIT:
            raise FieldError(f"field order {q} exceeds supported limit 2^16")
        if modulus is None:
            modulus = _default_modulus(p, h)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != h + 1 or modulus[-1] != 1:
                raise ReducibleModulusError(
                    f"modulus must be monic of degree {h}, got {modulus}"
                )
            if h > 1 and not _is_irreducible(modulus, p):
                raise ReducibleModulusError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.h = h
        self.q = q
        self.modulus = tuple(modulus)
        self._mul_t = self._add_t = self._neg_t = self._inv_t = None
        if q <= _TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _build_tables(self) -> None:
        p, h, q = self.p, self.h, self.q
        powers = p ** np.arange(h, dtype=np.int64)
        coeffs = (np.arange(q, dtype=np.int64)[:, None] // powers[None, :]) % p
        self._add_t = (((coeffs[:, None, :] + coeffs[None, :, :]) % p) @ powers).astype(np.int32)
        self._neg_t = (((-coeffs) % p) @ powers).astype(np.int32)
        mul = np.empty((q, q), dtype=np.int32)
        for b in range(q):
            # multiplication by b is GF(p)-linear: columns are x^i * b reduced
            mat = np.empty((h, h), dtype=np.int64)
            col = self.coeffs(b)
            for i in range(h):
                mat[i] = col
                if i + 1 < h:
                    col = tuple(_poly_mod([0] + list(col), self.modulus, p))
            mul[:, b] = (((coeffs @ mat) % p) @ powers).astype(np.int32)
        self._mul_t = mul
        inv = np.full(q, -1, dtype=np.int32)
        rows, cols = np.nonzero(mul == 1)
        inv[rows] = cols
        self._inv_t = inv

    # -- element views ---------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        out, rest = [], a
        for _ in range(self.h):
            out.append(rest % self.p)
            rest //= self.p
        return tuple(out)

    def from_coeffs(self, c: Sequence[int]) -> int:
        a = 0
        for i, ci in enumerate(c[: self.h]):
            a += (ci % self.p) * self.p**i
        return a

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return int(self._add_t[a, b])
        return self.from_coeffs([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        if self._neg_t is not None:
            return int(self._neg_t[a])
        return self.from_coeffs([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return int(self._mul_t[a, b])
        c = _poly_mul_mod(self.coeffs(a), self.coeffs(b), self.modulus, self.p)
        return self.from_coeffs(c)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZeroError("0 has no multiplicative inverse")
        if self._inv_t is not None:
            return int(self._inv_t[a])
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r, base = 1, a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def scalar(self, k: int) -> int:
        """The prime-subfield element k*1."""
        return k % self.p

    def in_subfield(self, a: int, d: int) -> bool:
        """True if a lies in the subfield GF(p^d); requires d | h."""
        if self.h % d != 0:
            raise FieldError(f"GF({self.p}^{d}) is not a subfield of GF({self.p}^{self.h})")
        return self.pow(a, self.p**d) == a

    def solve_monic_quadratic(self, b: int, c: int) -> tuple[int, ...]:
        """All roots of x^2 + b*x + c, by exhaustive evaluation."""
        roots = []
        for x in range(self.q):
            v = self.add(self.add(self.mul(x, x), self.mul(b, x)), c)
            if v == 0:
                roots.append(x)
        return tuple(roots)

    # -- misc -------------------------------------------------------------------

    def describe(self) -> str:
        return f"{self.p}^{self.h}" if self.h > 1 else f"{self.p}"

    def __repr__(self) -> str:
        return f"Field(GF({self.p}^{self.h}), modulus={list(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.h, self.modulus) == (other.p, other.h, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.h, self.modulus))


def field_new(p: int, h: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Construct GF(p^h); the default modulus is the irreducible with smallest code."""
    return Field(p, h, modulus)


def parse_field(spec: str) -> Field:
    """Parse a "p^h" or "p" string, e.g. "3^2" or "7"."""
    s = spec.strip()
    if "^" in s:
        ps, hs = s.split("^", 1)
        return field_new(int(ps), int(hs))
    return field_new(int(s), 1)
