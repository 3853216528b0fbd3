"""Exact integer and rational arithmetic.

Every scalar in the package is either a Python ``int`` or a
``fractions.Fraction``; both are arbitrary precision, and ``Fraction`` is
always stored reduced with a positive denominator, so equality of two
rationals is equality of their canonical forms.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]


class DomainError(ValueError):
    """A mathematically invalid input (singular point, degenerate triangle...)."""


class ConsistencyError(RuntimeError):
    """An internal identity failed; indicates a transcription bug."""


# Quadratic residues modulo 64, 63, 65 and 11.  A square must be a residue
# modulo each; together they reject ~99.4% of non-squares before isqrt.
_QR64 = frozenset(i * i % 64 for i in range(64))
_QR63 = frozenset(i * i % 63 for i in range(63))
_QR65 = frozenset(i * i % 65 for i in range(65))
_QR11 = frozenset(i * i % 11 for i in range(11))
RESIDUE_MODULUS = 64 * 63 * 65 * 11


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def isqrt(n: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(n)), exact)`` for a non-negative integer."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    root = math.isqrt(n)
    return root, root * root == n


def maybe_square(n: int) -> bool:
    """Residue pre-filter: False means ``n`` is certainly not a square."""
    r = n % RESIDUE_MODULUS
    return (r % 64 in _QR64 and r % 63 in _QR63
            and r % 65 in _QR65 and r % 11 in _QR11)


def is_square_int(n: int) -> bool:
    if n < 0:
        return False
    if not maybe_square(n):
        return False
    return isqrt(n)[1]


def is_perfect_square(x: RationalLike) -> bool:
    """True iff ``x`` is the square of a rational number."""
    x = as_rational(x)
    if x < 0:
        return False
    return is_square_int(x.numerator) and is_square_int(x.denominator)


def rational_sqrt(x: RationalLike) -> Fraction:
    """Non-negative square root of a rational square; DomainError otherwise."""
    x = as_rational(x)
    if not is_perfect_square(x):
        raise DomainError(f"{x} is not the square of a rational")
    return Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))


def gcd3(a: int, b: int, c: int) -> int:
    if a == 0 and b == 0 and c == 0:
        raise DomainError("gcd3 of (0, 0, 0) is undefined")
    return math.gcd(math.gcd(a, b), c)


_TRIAL_LIMIT = 1 << 14


def square_part(n: int) -> int:
    """Largest ``s`` with ``s*s`` dividing ``n`` (n > 0).

    Small primes are stripped by trial division.  A leftover cofactor below
    ``_TRIAL_LIMIT**3`` has at most two prime factors, so it is either a
    prime square or contributes nothing; anything larger goes to sympy.
    """
    if n <= 0:
        raise DomainError(f"square_part needs a positive integer, got {n}")
    s = 1
    d = 2
    while d < _TRIAL_LIMIT and d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            s *= d ** (e // 2)
        d += 1 if d == 2 else 2
    if n == 1:
        return s
    root, exact = isqrt(n)
    if exact:
        return s * root
    if n < _TRIAL_LIMIT ** 3:
        return s
    from sympy import factorint

    for p, e in factorint(n).items():
        s *= p ** (e // 2)
    return s


def min_square_multiple(n: int) -> int:
    """Smallest perfect square divisible by ``n`` (n > 0)."""
    if n <= 0:
        raise DomainError(f"min_square_multiple needs a positive integer, got {n}")
    # n * (squarefree part of n) is the least square multiple.
    s = square_part(n)
    free = n // (s * s)
    return n * free


def height(x: RationalLike) -> int:
    """Naive height max(|num|, den)."""
    x = as_rational(x)
    return max(abs(x.numerator), x.denominator)


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"``; decimals are rejected on purpose."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x: RationalLike) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
