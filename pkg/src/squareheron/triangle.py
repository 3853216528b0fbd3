"""Heron triangles: area, classification and square-preserving scaling."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .exact import (
    DomainError,
    RationalLike,
    as_rational,
    gcd3,
    is_perfect_square,
    is_square_int,
    isqrt,
    min_square_multiple,
    square_part,
)


def heron_sixteen_area_sq(a: RationalLike, b: RationalLike, c: RationalLike) -> Fraction:
    """Return 16 * area**2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c).

    Positive exactly when the strict triangle inequality holds.
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    if a <= 0 or b <= 0 or c <= 0:
        raise DomainError(f"sides must be positive, got ({a}, {b}, {c})")
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)


def _heron_area(a: int, b: int, c: int) -> int | None:
    """Integer area if (a, b, c) is a Heron triangle, else None."""
    p = heron_sixteen_area_sq(a, b, c).numerator
    if p <= 0 or not is_square_int(p):
        return None
    root = isqrt(p)[0]
    if root % 4:
        return None
    return root // 4


@dataclass(frozen=True)
class IntTriangle:
    """Heron triangle with integer sides in their given order.

    ``square_mask[i]`` tells whether side ``i`` is a perfect square.
    """

    a: int
    b: int
    c: int
    area: int
    square_mask: tuple[bool, bool, bool]

    @classmethod
    def from_sides(cls, a: int, b: int, c: int) -> "IntTriangle":
        area = _heron_area(a, b, c)
        if area is None:
            raise DomainError(f"({a}, {b}, {c}) is not a Heron triangle")
        mask = tuple(is_square_int(x) for x in (a, b, c))
        return cls(a, b, c, area, mask)  # type: ignore[arg-type]

    @property
    def sides(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def sorted_sides(self) -> tuple[int, int, int]:
        return tuple(sorted(self.sides))  # type: ignore[return-value]

    @property
    def perimeter(self) -> int:
        return self.a + self.b + self.c

    @property
    def primitive(self) -> bool:
        return gcd3(self.a, self.b, self.c) == 1

    @property
    def square_sides(self) -> int:
        return sum(self.square_mask)

    def to_record(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "area": self.area,
            "primitive": self.primitive,
            "square_sides": [i for i, sq in enumerate(self.square_mask) if sq],
        }


@dataclass(frozen=True)
class RationalTriangle:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if heron_sixteen_area_sq(self.a, self.b, self.c) <= 0:
            raise DomainError(
                f"({self.a}, {self.b}, {self.c}) violates the strict triangle inequality"
            )

    @property
    def sides(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class Classification:
    a: int
    b: int
    c: int
    heron: bool
    degenerate: bool
    area: int | None
    primitive: bool
    square_mask: tuple[bool, bool, bool]

    @property
    def square_sides(self) -> int:
        return sum(self.square_mask)

    def to_record(self) -> dict:
        rec = {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "heron": self.heron,
            "degenerate": self.degenerate,
            "area": self.area,
            "primitive": self.primitive,
            "square_sides": self.square_sides,
            "square_positions": [i for i, sq in enumerate(self.square_mask) if sq],
        }
        return rec


def classify(a: int, b: int, c: int) -> Classification:
    for x in (a, b, c):
        if not isinstance(x, int) or x <= 0:
            raise DomainError(f"sides must be positive integers, got ({a}, {b}, {c})")
    p = heron_sixteen_area_sq(a, b, c)
    degenerate = p == 0
    area = _heron_area(a, b, c) if p > 0 else None
    return Classification(
        a, b, c,
        heron=area is not None,
        degenerate=degenerate,
        area=area,
        primitive=gcd3(a, b, c) == 1,
        square_mask=(is_square_int(a), is_square_int(b), is_square_int(c)),
    )


def _mask_positions(preserve: Iterable[int] | Sequence[bool]) -> tuple[int, ...]:
    items = list(preserve)
    if items and all(isinstance(x, bool) for x in items):
        if len(items) != 3:
            raise DomainError(f"boolean mask must have 3 entries, got {len(items)}")
        return tuple(i for i, keep in enumerate(items) if keep)
    positions = tuple(sorted(set(int(i) for i in items)))
    if any(i not in (0, 1, 2) for i in positions):
        raise DomainError(f"mask positions must be in 0..2, got {positions}")
    return positions


def normalize_preserving_squares(t: RationalTriangle, preserve=()) -> IntTriangle:
    """Scale a rational triangle to integers by perfect squares only.

    ``preserve`` lists the side positions (0-based) that must stay perfect
    squares; a boolean triple is accepted too.  The triangle is multiplied
    by the least square that clears every denominator and then divided by
    the largest square dividing the gcd of the sides.  A leftover
    non-square common factor is kept, and shows up as ``primitive=False``.
    """
    positions = _mask_positions(preserve)
    for i in positions:
        if not is_perfect_square(t.sides[i]):
            raise DomainError(f"side {i} = {t.sides[i]} is not a rational square")
    den = lcm(*(x.denominator for x in t.sides))
    scale = min_square_multiple(den)
    ints = [int(x * scale) for x in t.sides]
    g = gcd(gcd(ints[0], ints[1]), ints[2])
    s = square_part(g)
    ints = [x // (s * s) for x in ints]
    out = IntTriangle.from_sides(*ints)
    for i in positions:
        if not out.square_mask[i]:
            raise AssertionError(f"side {i} lost squareness during scaling")
    return out
