"""Closed-form generators of two-square Heron triangles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, NamedTuple

from .exact import DomainError, RationalLike, as_rational, gcd3
from .triangle import IntTriangle, RationalTriangle, normalize_preserving_squares


@dataclass(frozen=True)
class ParamRatio:
    """k = m/n with m, n > 0 coprime and m != n."""

    m: int
    n: int

    def __post_init__(self):
        if self.m <= 0 or self.n <= 0:
            raise DomainError(f"m, n must be positive, got ({self.m}, {self.n})")
        if gcd(self.m, self.n) != 1:
            raise DomainError(f"gcd({self.m}, {self.n}) != 1")
        if self.m == self.n:
            raise DomainError("m = n gives k = 1, which is excluded")

    @classmethod
    def from_k(cls, k: RationalLike) -> "ParamRatio":
        k = as_rational(k)
        return cls(k.numerator, k.denominator)

    @property
    def k(self) -> Fraction:
        return Fraction(self.m, self.n)

    def label(self) -> str:
        return f"{self.m}/{self.n}"


class FamilySides(NamedTuple):
    """Raw (a, b, c) of the family; a and c are rational squares."""

    a: Fraction
    b: Fraction
    c: Fraction


def _check_k(k: Fraction) -> None:
    if k <= 0 or k == 1:
        raise DomainError(f"k must be positive and != 1, got {k}")


def theorem14_sides(k: RationalLike) -> FamilySides:
    k = as_rational(k)
    _check_k(k)
    k2 = k * k
    u = (k**4 + 1) ** 2
    a = (u - 4 * k2 * (k2 + 1) ** 2) ** 2
    b = 8 * k * (k2 + 1) * (k**4 + 1) * (u - 4 * k2 * (k2 - 1) ** 2)
    c = (u + 4 * k2 * (k2 - 1) ** 2) ** 2
    if a == 0:
        raise DomainError(f"family degenerates at k = {k}")
    return FamilySides(a, b, c)


def theorem14_triangle(k: RationalLike) -> IntTriangle:
    """Normalized family member, ordered (a, c, b): squares first."""
    s = theorem14_sides(k)
    return normalize_preserving_squares(RationalTriangle(s.a, s.c, s.b), (0, 1))


def _MN(m: int, n: int) -> tuple[int, int]:
    m2, n2 = m * m, n * n
    M = m**8 - 4 * m**6 * n2 + 10 * m**4 * n**4 - 4 * m2 * n**6 + n**8
    N = m**8 - 4 * m**6 * n2 - 6 * m**4 * n**4 - 4 * m2 * n**6 + n**8
    return M, N


def theorem14_rq(mn: ParamRatio) -> tuple[Fraction, Fraction]:
    """(r, q) of the canonical point in closed form, with q printed positive-numerator."""
    m, n = mn.m, mn.n
    M, N = _MN(m, n)
    if N == 0:
        raise DomainError(f"N vanishes at {mn.label()}")
    r = Fraction(8 * m * n * (m * m + n * n) * (m**4 + n**4) * M, N * N)
    q = Fraction(m**8 + 4 * m**6 * n * n - 6 * m**4 * n**4 + 4 * m * m * n**6 + n**8, N)
    return r, q


@dataclass(frozen=True)
class GcdLedger:
    M: int
    N: int
    d: int
    closed_form_d: int
    coprime_check: bool

    @property
    def consistent(self) -> bool:
        return self.d == self.closed_form_d and self.coprime_check


def gcd_ledger(mn: ParamRatio) -> GcdLedger:
    """Compare gcd(M, N) with its parity rule and check the cofactor coprimality."""
    m, n = mn.m, mn.n
    M, N = _MN(m, n)
    if M - N != 16 * m**4 * n**4:
        raise AssertionError(f"M - N != 16 m^4 n^4 at {mn.label()}")
    d = gcd(M, N)
    closed = 4 if (m % 2 == 1 and n % 2 == 1) else 1
    M1, N1 = M // d, N // d
    coprime = gcd(m * n * (m * m + n * n) * (m**4 + n**4) * M1, N1) == 1
    return GcdLedger(M, N, d, closed, coprime)


def primitive_family_triangle(mn: ParamRatio) -> IntTriangle:
    return theorem14_triangle(mn.k)


def coprime_pairs(m_max: int) -> Iterator[ParamRatio]:
    """All ParamRatio with 1 <= n < m <= m_max, in (m, n) order."""
    for m in range(2, m_max + 1):
        for n in range(1, m):
            if gcd(m, n) == 1:
                yield ParamRatio(m, n)


def isosceles_triple(k: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    k = as_rational(k)
    _check_k(k)
    return (Fraction(1), Fraction(1), 4 * k / (k * k + 1))


def isosceles_triangle(k: RationalLike) -> IntTriangle:
    return normalize_preserving_squares(RationalTriangle(*isosceles_triple(k)), (0, 1))


def isosceles_raw(u: int, v: int, variant: int) -> tuple[int, int, int]:
    """Un-normalized isosceles family member."""
    if variant not in (1, 2):
        raise DomainError(f"variant must be 1 or 2, got {variant}")
    if not u > v > 0:
        raise DomainError(f"need u > v > 0, got ({u}, {v})")
    if gcd(u, v) != 1:
        raise DomainError(f"gcd({u}, {v}) != 1")
    leg = (u * u + v * v) ** 2
    if variant == 1:
        base = 8 * u * v * (u * u - v * v)
    else:
        base = 2 * (u * u - v * v) ** 2 - 8 * u * u * v * v
    if base <= 0 or base >= 2 * leg:
        raise DomainError(f"variant {variant} at ({u}, {v}) gives base {base}, not a triangle")
    return (leg, leg, base)


def isosceles_family(u: int, v: int, variant: int) -> IntTriangle:
    """Isosceles member with square legs; a common factor of 4 is divided out."""
    raw = isosceles_raw(u, v, variant)
    g = gcd3(*raw)
    if g not in (1, 4):
        raise AssertionError(f"unexpected common factor {g} at ({u}, {v})")
    return normalize_preserving_squares(RationalTriangle(*raw), (0, 1))
