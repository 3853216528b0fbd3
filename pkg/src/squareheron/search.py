"""Brute-force oracles: two-square Heron enumeration and bounded point search."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Iterator, Sequence

from . import _core
from .elliptic import CurveK, ECPoint, WeierstrassCurve
from .exact import DomainError, RationalLike, as_rational, height
from .triangle import IntTriangle


@dataclass(frozen=True)
class SearchBounds:
    max_side: int = 2000
    height_bound: int = 100

    def __post_init__(self):
        if self.max_side <= 0 or self.height_bound <= 0:
            raise DomainError("search bounds must be positive")


Partition = tuple[int, int]


def p_partitions(max_side: int, chunk: int = 1) -> list[Partition]:
    """Split the smaller square root p into inclusive ranges of ``chunk`` values."""
    p_max = isqrt(max_side)
    return [(lo, min(lo + chunk - 1, p_max)) for lo in range(1, p_max + 1, chunk)]


def _canonical(p: int, q: int, c: int) -> bool:
    # Keep a hit only if (p, q) are the two smallest square roots among the
    # sides; a triangle with three square sides is then reported once.
    r = isqrt(c)
    return r * r != c or r >= q


def _scan(part: Partition, max_side: int, backend: str | None) -> list[IntTriangle]:
    hits = _core.two_square_hits(part[0], part[1], max_side, backend=backend)
    out = []
    for p, q, c, area in hits:
        if not _canonical(p, q, c):
            continue
        t = IntTriangle.from_sides(p * p, q * q, c)
        if t.area != area:
            raise AssertionError(f"kernel area mismatch at {(p, q, c)}")
        out.append(t)
    return out


def _sort_key(t: IntTriangle):
    return (t.perimeter, t.sorted_sides, t.sides)


def scan_partitions(
    max_side: int,
    partitions: Sequence[Partition],
    workers: int = 1,
    backend: str | None = None,
) -> Iterator[tuple[Partition, list[IntTriangle]]]:
    """Yield ``(partition, triangles)`` in the order given, whatever ``workers`` is."""
    if workers <= 1 or len(partitions) <= 1:
        for part in partitions:
            yield part, _scan(part, max_side, backend)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_scan, part, max_side, backend) for part in partitions]
        for part, fut in zip(partitions, futures):
            yield part, fut.result()


def enumerate_two_square_heron(
    b: SearchBounds,
    workers: int = 1,
    p_range: tuple[int, int] | None = None,
    backend: str | None = None,
) -> list[IntTriangle]:
    """All Heron triangles (p^2, q^2, c), p <= q, with every side <= max_side.

    Triangles are listed once up to side order and sorted by perimeter.
    ``p_range`` restricts the smaller square root, which makes large
    ``max_side`` values tractable for targeted checks.
    """
    if b.max_side < 16:
        raise DomainError("max_side must be at least 16")
    parts = p_partitions(b.max_side)
    if p_range is not None:
        parts = [(lo, hi) for lo, hi in parts if p_range[0] <= lo <= p_range[1]]
    found: list[IntTriangle] = []
    for _, tris in scan_partitions(b.max_side, parts, workers, backend):
        found.extend(tris)
    found.sort(key=_sort_key)
    return found


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("HERON_WORKERS", "1")))
    except ValueError:
        return 1


def u_partitions(height_bound: int, parts: int) -> list[Partition]:
    """Split 0..height_bound into ``parts`` contiguous inclusive intervals."""
    parts = max(1, min(parts, height_bound + 1))
    step = -(-(height_bound + 1) // parts)
    return [(lo, min(lo + step - 1, height_bound)) for lo in range(0, height_bound + 1, step)]


def _point_hits(a_num: int, a_den: int, part: Partition, w_max: int, backend: str | None):
    return _core.weierstrass_x_hits(a_num, a_den, part[0], part[1], w_max, backend=backend)


def points_on(
    curve: WeierstrassCurve,
    height_bound: int,
    backend: str | None = None,
    workers: int = 1,
) -> list[ECPoint]:
    """Affine points with X = u/w^2, 0 <= u <= height_bound, w <= sqrt(height_bound).

    Requires a > 0, where u < 0 makes X^3 + aX negative.  Each point is
    verified on the curve before it is returned.
    """
    a = curve.a
    if a <= 0:
        raise DomainError("bounded point search is implemented for a > 0 only")
    w_max = max(1, isqrt(height_bound))
    hits = []
    if workers <= 1:
        hits = _point_hits(a.numerator, a.denominator, (0, height_bound), w_max, backend)
    else:
        parts = u_partitions(height_bound, 4 * workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_point_hits, a.numerator, a.denominator, part, w_max, backend)
                       for part in parts]
            for fut in futures:
                hits.extend(fut.result())
    points = []
    for u, w, root in hits:
        x = Fraction(u, w * w)
        y = Fraction(root, a.denominator * w**3)
        for pt in ((ECPoint(x, y), ECPoint(x, -y)) if y else (ECPoint(x, y),)):
            if not curve.contains(pt):
                raise AssertionError(f"search returned off-curve point {pt}")
            points.append(pt)
    points.sort(key=lambda pt: (height(pt.x), pt.x, pt.y))
    return points


def find_points(k: RationalLike, b: SearchBounds, backend: str | None = None, workers: int = 1) -> list[ECPoint]:
    return points_on(CurveK.for_k(k), b.height_bound, backend, workers)


RANK0_CURVE = WeierstrassCurve(Fraction(16))


def rank0_desk_check(height_bound: int, backend: str | None = None) -> bool:
    """Bounded search on Y^2 = X^3 + 16X finds nothing but (0, 0).

    A consistency check at desk scale, not a proof of rank 0.
    """
    if height_bound < 1:
        raise DomainError("height_bound must be >= 1")
    pts = points_on(RANK0_CURVE, height_bound, backend)
    return pts == [ECPoint(0, 0)]
