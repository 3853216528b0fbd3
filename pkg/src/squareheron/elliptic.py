"""The curves Y^2 = X^3 + (2(k^4-1))^2 X and their link to two-square triangles.

A rational point (X, Y) maps to a pair (r, q) with
q^4 = r^2 - 4k/(k^2+1) r + 1, i.e. to a triangle with sides (1, q^2, r),
and back again.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .exact import ConsistencyError, DomainError, RationalLike, as_rational, format_rational
from .triangle import IntTriangle, RationalTriangle, heron_sixteen_area_sq, normalize_preserving_squares


@dataclass(frozen=True)
class ECPoint:
    """Affine point, or the point at infinity when ``x`` and ``y`` are None."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", as_rational(self.x))
            object.__setattr__(self, "y", as_rational(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "ECPoint":
        if self.is_infinity:
            return self
        return ECPoint(self.x, -self.y)

    def __repr__(self) -> str:
        if self.is_infinity:
            return "ECPoint(inf)"
        return f"ECPoint({format_rational(self.x)}, {format_rational(self.y)})"


INFINITY = ECPoint()


@dataclass(frozen=True)
class WeierstrassCurve:
    """Y^2 = X^3 + a X over the rationals, a != 0."""

    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        if self.a == 0:
            raise DomainError("a = 0 gives a singular curve")

    @property
    def discriminant(self) -> Fraction:
        # -16(4a^3 + 27b^2) with b = 0
        return -64 * self.a**3

    def contains(self, p: ECPoint) -> bool:
        if p.is_infinity:
            return True
        return p.y * p.y == p.x**3 + self.a * p.x

    def _check(self, p: ECPoint) -> None:
        if not self.contains(p):
            raise DomainError(f"{p} is not on Y^2 = X^3 + {self.a} X")

    def add(self, p: ECPoint, q: ECPoint) -> ECPoint:
        self._check(p)
        self._check(q)
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        if p.x == q.x:
            if p.y == -q.y:
                return INFINITY
            lam = (3 * p.x * p.x + self.a) / (2 * p.y)
        else:
            lam = (q.y - p.y) / (q.x - p.x)
        x3 = lam * lam - p.x - q.x
        y3 = lam * (p.x - x3) - p.y
        return ECPoint(x3, y3)

    def double(self, p: ECPoint) -> ECPoint:
        return self.add(p, p)

    def neg(self, p: ECPoint) -> ECPoint:
        self._check(p)
        return -p

    def mul(self, p: ECPoint, n: int) -> ECPoint:
        self._check(p)
        if n < 0:
            p, n = -p, -n
        acc = INFINITY
        while n:
            if n & 1:
                acc = self.add(acc, p)
            p = self.add(p, p)
            n >>= 1
        return acc


@dataclass(frozen=True)
class CurveK(WeierstrassCurve):
    """The curve attached to parameter k: a = (2(k^4 - 1))^2."""

    k: Fraction = field(default=Fraction(0))

    @classmethod
    def for_k(cls, k: RationalLike) -> "CurveK":
        k = as_rational(k)
        if k == 0 or k * k == 1:
            raise DomainError(f"k = {format_rational(k)} is excluded (k must not be 0 or +-1)")
        return cls(a=(2 * (k**4 - 1)) ** 2, k=k)

    @property
    def discriminant(self) -> Fraction:
        return -256 * (self.k**4 - 1) ** 6

    def singular_x(self) -> tuple[Fraction, Fraction]:
        """X values where the inverse map has a pole; their product is ``a``."""
        k = self.k
        return (2 * (k * k + 1) * (k - 1) ** 2, 2 * (k * k + 1) * (k + 1) ** 2)


def is_on_curve(c: WeierstrassCurve, p: ECPoint) -> bool:
    return c.contains(p)


def ec_add(c: WeierstrassCurve, p: ECPoint, q: ECPoint) -> ECPoint:
    return c.add(p, q)


def ec_neg(c: WeierstrassCurve, p: ECPoint) -> ECPoint:
    return c.neg(p)


def ec_double(c: WeierstrassCurve, p: ECPoint) -> ECPoint:
    return c.double(p)


def ec_scalar_mul(c: WeierstrassCurve, p: ECPoint, n: int) -> ECPoint:
    return c.mul(p, n)


def is_trivial(p: ECPoint) -> bool:
    """Convention: infinity and the 2-torsion point (0, 0) are trivial."""
    return p.is_infinity or (p.x == 0 and p.y == 0)


def _curve_k(k) -> CurveK:
    return k if isinstance(k, CurveK) else CurveK.for_k(k)


def two_square_residual(k: RationalLike, r: RationalLike, q: RationalLike) -> Fraction:
    """q^4 - r^2 + 4k/(k^2+1) r - 1; zero on the two-square quartic."""
    k, r, q = as_rational(k), as_rational(r), as_rational(q)
    return q**4 - r * r + 4 * k / (k * k + 1) * r - 1


def forward_map(k: RationalLike, r: RationalLike, q: RationalLike) -> ECPoint:
    """(r, q) on the two-square quartic -> point on the k-curve."""
    curve = _curve_k(k)
    k, r, q = curve.k, as_rational(r), as_rational(q)
    if r == 0:
        raise DomainError("forward map undefined at r = 0")
    if two_square_residual(k, r, q) != 0:
        raise DomainError(f"(r, q) = ({r}, {q}) is not on the quartic for k = {k}")
    k2 = k * k
    xpoly = r * r * (k2 + 1) - 2 * r * (q * q - 2 * q + 3) * k - 2 * (q - 1) * (q * q + 1) * (k2 + 1)
    ypoly = (
        2 * k * (k2 + 1) * r**3
        - ((k2 + 1) ** 2 * q * q - 2 * (k**4 + 4 * k2 + 1) * q + 3 * (k**4 + 6 * k2 + 1)) * r * r
        - 2 * k * (3 * q**3 - 5 * q * q + 7 * q - 9) * (k2 + 1) * r
        + 4 * (q - 1) * (q * q + 1) * (k2 + 1) ** 2
    )
    p = ECPoint(2 * (k2 + 1) * xpoly / r**2, 4 * (k2 + 1) * ypoly / r**3)
    if not curve.contains(p):
        raise ConsistencyError(f"forward map left the curve at k={k}, r={r}, q={q}")
    return p


def _positivity_parts(k: Fraction, x: Fraction) -> tuple[Fraction, Fraction]:
    """(numerator, positive denominator) of the threshold Y must exceed."""
    k2 = k * k
    num = 2 * k * (
        3 * x**3
        - 2 * (3 * k**4 + 2 * k2 + 3) * x * x
        + 4 * (k**4 - 1) ** 2 * x
        - 8 * (k2 + 1) ** 2 * (k2 - 1) ** 4
    )
    den = (x - 2 * (k2 - 1) ** 2) ** 2 + 16 * k2 * (k2 - 1) ** 2
    return num, den


def inverse_map(k: RationalLike, p: ECPoint) -> tuple[Fraction, Fraction]:
    """Point on the k-curve -> (r, q) on the two-square quartic."""
    curve = _curve_k(k)
    k = curve.k
    if p.is_infinity:
        raise DomainError("inverse map undefined at the point at infinity")
    if not curve.contains(p):
        raise DomainError(f"{p} is not on the curve for k = {format_rational(k)}")
    x, y = p.x, p.y
    s1, s2 = curve.singular_x()
    if x in (s1, s2):
        raise DomainError(f"inverse map singular at X = {format_rational(x)}")
    num, den = _positivity_parts(k, x)
    rpoly = den * y - num
    d1, d2 = x - s1, x - s2
    r = 4 * (k * k + 1) * rpoly / (d1 * d1 * d2 * d2)
    q = (4 * y * k - x * x + 4 * (k**4 - 1) ** 2) / (d1 * d2)
    if two_square_residual(k, r, q) != 0:
        raise ConsistencyError(f"inverse map left the quartic at k={k}, {p}")
    return r, q


def positivity_condition(k: RationalLike, p: ECPoint) -> bool:
    """Whether Y exceeds the threshold that makes r > 0."""
    curve = _curve_k(k)
    if p.is_infinity:
        raise DomainError("positivity condition needs an affine point")
    num, den = _positivity_parts(curve.k, p.x)
    return p.y > num / den


def point_to_triangle(k: RationalLike, p: ECPoint) -> IntTriangle:
    """Triangle (1, q^2, r) scaled to integers, first two sides kept square."""
    curve = _curve_k(k)
    if not positivity_condition(curve, p):
        raise DomainError(f"{p} fails the positivity condition (r <= 0)")
    r, q = inverse_map(curve, p)
    if q == 0:
        raise DomainError(f"{p} gives q = 0")
    sides = (Fraction(1), q * q, r)
    if heron_sixteen_area_sq(*sides) <= 0:
        raise DomainError(f"{p} gives a degenerate triangle {sides}")
    return normalize_preserving_squares(RationalTriangle(*sides), (0, 1))


def canonical_point(k: RationalLike) -> ECPoint:
    """The point (4k^2, 4k(k^4+1)), of infinite order for k != 0, +-1."""
    curve = _curve_k(k)
    k = curve.k
    p = ECPoint(4 * k * k, 4 * k * (k**4 + 1))
    if not curve.contains(p):
        raise ConsistencyError(f"canonical point off the curve at k = {k}")
    return p


@dataclass(frozen=True)
class IntegerModel:
    """V^2 = U^3 + A U with A = 4(m^4 - n^4)^2, from X = U/n^4, Y = V/n^6."""

    m: int
    n: int

    def __post_init__(self):
        m, n = self.m, self.n
        if m == 0 or n == 0:
            raise DomainError("m and n must be non-zero")
        if gcd(m, n) != 1:
            raise DomainError(f"gcd({m}, {n}) != 1")
        if m == n or m == -n:
            raise DomainError("m must differ from +-n")

    @property
    def A(self) -> int:
        return 4 * (self.m**4 - self.n**4) ** 2

    @property
    def delta(self) -> int:
        return -256 * (self.m**4 - self.n**4) ** 6

    @property
    def p_prime(self) -> tuple[int, int]:
        m, n = self.m, self.n
        return (4 * m * m * n * n, 4 * m * n * (m**4 + n**4))

    @property
    def curve(self) -> WeierstrassCurve:
        return WeierstrassCurve(Fraction(self.A))

    @property
    def point(self) -> ECPoint:
        return ECPoint(*self.p_prime)


def integer_model(m: int, n: int) -> IntegerModel:
    model = IntegerModel(m, n)
    if not model.curve.contains(model.point):
        raise ConsistencyError(f"P' off the integer model for ({m}, {n})")
    p = canonical_point(Fraction(m, n))
    u, v = model.p_prime
    if p.x != Fraction(u, n**4) or p.y != Fraction(v, n**6):
        raise ConsistencyError(f"integer model does not match the k-curve at {m}/{n}")
    return model


def nagell_lutz_divides(m: int, n: int) -> bool:
    """Does m^2 n^2 (m^4+n^4)^2 divide 16 (m^4-n^4)^6?  (y^2 | Delta for P'.)"""
    lhs = m * m * n * n * (m**4 + n**4) ** 2
    return (16 * (m**4 - n**4) ** 6) % lhs == 0


def nagell_lutz_infinite_order(m: int, n: int) -> bool:
    """Certify that P' has infinite order on the integer model.

    A torsion point with y != 0 on an integral model has y^2 | Delta, so a
    failed divisibility proves infinite order.  A True result is a proof;
    False only means this test is inconclusive.
    """
    integer_model(m, n)
    return not nagell_lutz_divides(m, n)


def doubling_certificate(m: int, n: int) -> bool:
    """Independent check: True if 2P' has a non-integral coordinate.

    Multiples of a torsion point are torsion and therefore integral on an
    integral model, so a non-integral double also proves infinite order.
    """
    model = integer_model(m, n)
    twice = model.curve.double(model.point)
    if twice.is_infinity:
        return False
    return twice.x.denominator != 1 or twice.y.denominator != 1


def point_record(k: RationalLike, p: ECPoint) -> dict:
    return {
        "k": format_rational(as_rational(k)),
        "X": None if p.is_infinity else format_rational(p.x),
        "Y": None if p.is_infinity else format_rational(p.y),
    }
