"""Binary fields GF(2^k), the order-(q+1) matrix group S, and point counts.

Elements are k-bit integers in the polynomial basis.  The modulus is the
lexicographically least irreducible degree-k polynomial whose class of x
is primitive, and theta is that class, so every downstream constant is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np


class DegreeOutOfRange(ValueError):
    """Supported extension degrees are 1..16."""


class ReducibleQuadratic(ValueError):
    """x^2 + theta^m x + 1 has a root in the field."""


class ZeroC(ValueError):
    """The curve parameter c must be nonzero."""


def _poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _poly_mod(a: int, mod: int) -> int:
    dm = mod.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= mod << (a.bit_length() - 1 - dm)
    return a


def _irreducible(f: int) -> bool:
    k = f.bit_length() - 1
    if k == 1:
        return True
    if not f & 1:
        return False
    for g in range(2, 1 << (k // 2 + 1)):
        if g.bit_length() - 1 >= 1 and _poly_divides(g, f):
            return False
    return True


def _poly_divides(g: int, f: int) -> bool:
    r = f
    dg = g.bit_length() - 1
    while r.bit_length() - 1 >= dg and r:
        r ^= g << (r.bit_length() - 1 - dg)
    return r == 0


@dataclass(frozen=True)
class GF2k:
    """GF(2^k) with designated primitive element theta (the class of x)."""

    k: int
    modulus: int
    theta: int

    @property
    def q(self) -> int:
        return 1 << self.k

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return _poly_mod(_poly_mul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        e %= self.q - 1 or 1
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    def theta_pow(self, m: int) -> int:
        return self.pow(self.theta, m % (self.q - 1 or 1))

    def tables(self) -> tuple[list[int], list[int]]:
        """(exp, log): exp[i] = theta^i, log[exp[i]] = i, log[0] = -1."""
        exp = [1]
        for _ in range(self.q - 2):
            exp.append(self.mul(exp[-1], self.theta))
        log = [-1] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        return exp, log


def _element_order(F: GF2k, a: int) -> int:
    o = 1
    x = a
    while x != 1:
        x = F.mul(x, a)
        o += 1
    return o


def field_make(k: int) -> GF2k:
    """Deterministic GF(2^k); see module docstring for the convention."""
    if not 1 <= k <= 16:
        raise DegreeOutOfRange(f"k={k} outside 1..16")
    if k == 1:
        return GF2k(1, 0b11, 1)
    for f in range(1 << k | 1, 1 << (k + 1), 2):
        if not _irreducible(f):
            continue
        F = GF2k(k, f, 2)
        if _element_order(F, 2) == F.q - 1:
            return F
    raise AssertionError("no primitive modulus found")


def quad_irreducible_m(F: GF2k) -> int:
    """Least m with x^2 + theta^m x + 1 rootless over F (k >= 2)."""
    if F.k < 2:
        raise DegreeOutOfRange("need k >= 2")
    for m in range(F.q - 1):
        tm = F.theta_pow(m)
        if all(F.mul(x, x) ^ F.mul(tm, x) ^ 1 for x in range(F.q)):
            return m
    raise AssertionError("no irreducible quadratic x^2 + theta^m x + 1")


@dataclass(frozen=True)
class SMatrix:
    """The matrix s(a, b) = [[a, b], [b, a + b*theta^m]]."""

    a: int
    b: int

    def entries(self, F: GF2k, m: int) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.b,
                self.a ^ F.mul(self.b, F.theta_pow(m)))


def s_mul(F: GF2k, m: int, x: SMatrix, y: SMatrix) -> SMatrix:
    tm = F.theta_pow(m)
    a = F.mul(x.a, y.a) ^ F.mul(x.b, y.b)
    b = F.mul(x.a, y.b) ^ F.mul(x.b, y.a) ^ F.mul(F.mul(x.b, y.b), tm)
    return SMatrix(a, b)


def s_group(F: GF2k, m: int) -> list[SMatrix]:
    """All s(a, b) with det = a^2 + b^2 + ab*theta^m = 1; cyclic of
    order q + 1."""
    tm = F.theta_pow(m)
    if any(F.mul(x, x) ^ F.mul(tm, x) ^ 1 == 0 for x in range(F.q)):
        raise ReducibleQuadratic(f"x^2 + theta^{m} x + 1 has a root")
    out = [SMatrix(a, b) for a in range(F.q) for b in range(F.q)
           if F.mul(a, a) ^ F.mul(b, b) ^ F.mul(F.mul(a, b), tm) == 1]
    if len(out) != F.q + 1:
        raise AssertionError("S does not have order q+1")
    members = set(out)
    for x in out[: min(len(out), 8)]:
        for y in out:
            if s_mul(F, m, x, y) not in members:
                raise AssertionError("S is not closed under product")
    if not any(s_matrix_order(F, m, s) == F.q + 1 for s in out):
        raise AssertionError("S is not cyclic of order q+1")
    return out


def s_matrix_order(F: GF2k, m: int, s: SMatrix) -> int:
    ident = SMatrix(1, 0)
    o = 1
    x = s
    while x != ident:
        x = s_mul(F, m, x, s)
        o += 1
    return o


def count_eq2(F: GF2k, m: int, c: int, require_y_nonzero: bool = False) -> int:
    """Exhaustive count of (a, y) with a^2 + c*theta^m*a*y^3 + c^2*y^6
    + 1 = 0."""
    if c == 0:
        raise ZeroC("c must be nonzero")
    q = F.q
    d1 = F.mul(c, F.theta_pow(m))
    d2 = F.mul(c, c)
    y3 = [F.mul(F.mul(y, y), y) for y in range(q)]
    t1 = np.array([F.mul(d1, v) for v in y3], dtype=np.int64)
    t2 = np.array([F.mul(d2, F.mul(v, v)) ^ 1 for v in y3], dtype=np.int64)
    sq = np.array([F.mul(a, a) for a in range(q)], dtype=np.int64)
    exp, log = F.tables()
    logv = np.array(log, dtype=np.int64)
    expv = np.array(exp, dtype=np.int64)
    la = logv[np.arange(q)]
    lt = logv[t1]
    prod = expv[(la[:, None] + lt[None, :]) % (q - 1)]
    prod[0, :] = 0
    prod[:, t1 == 0] = 0
    lhs = sq[:, None] ^ prod ^ t2[None, :]
    zero = lhs == 0
    if require_y_nonzero:
        zero[:, 0] = False
    return int(zero.sum())


def weil_check(N: int, q: int, d: int) -> bool:
    """|N - q| <= (d-1)(d-2)*sqrt(q) + d^2, decided in exact integers."""
    lhs = abs(N - q) - d * d
    if lhs <= 0:
        return True
    coeff = (d - 1) * (d - 2)
    s = isqrt(q)
    if s * s == q:
        return lhs <= coeff * s
    return lhs * lhs <= coeff * coeff * q
