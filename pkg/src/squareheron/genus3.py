"""Triangles with three square sides and the quartic q^4 = r^4 - 4k/(k^2+1) r^2 + 1.

A triangle is placed with vertices (0, 0), (r^2, 0) and (s, t), the side
from the origin to (s, t) having length 1.  Writing s = 2k/(k^2+1),
t = (k^2-1)/(k^2+1) puts that vertex on the unit circle, and the length of
the third side is q^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import DomainError, RationalLike, as_rational, format_rational
from .triangle import IntTriangle, RationalTriangle, heron_sixteen_area_sq, normalize_preserving_squares


def eval_F(k: RationalLike, r: RationalLike, q: RationalLike) -> Fraction:
    k, r, q = as_rational(k), as_rational(r), as_rational(q)
    return q**4 - r**4 + 4 * k / (k * k + 1) * r**2 - 1


@dataclass(frozen=True)
class GenusThreeSolution:
    """A triple (k, r, q); not necessarily on the curve (see ``is_solution``)."""

    k: Fraction
    r: Fraction
    q: Fraction

    def __post_init__(self):
        for name in ("k", "r", "q"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @property
    def residual(self) -> Fraction:
        return eval_F(self.k, self.r, self.q)

    @property
    def is_solution(self) -> bool:
        return self.residual == 0

    def height(self) -> int:
        return max(max(abs(x.numerator), x.denominator) for x in (self.k, self.r, self.q))


@dataclass(frozen=True)
class VertexData:
    s: Fraction
    t: Fraction
    p: Fraction = Fraction(1)


def vertex_coords(k: RationalLike) -> VertexData:
    k = as_rational(k)
    d = k * k + 1
    v = VertexData(2 * k / d, (k * k - 1) / d)
    assert v.s**2 + v.t**2 == 1
    return v


def check_system(sol: GenusThreeSolution) -> bool:
    """Check the coordinate system directly: unit side and third side q^2."""
    v = vertex_coords(sol.k)
    ok = v.s**2 + v.t**2 == 1 and (v.s - sol.r**2) ** 2 + v.t**2 == sol.q**4
    if ok != sol.is_solution:
        raise AssertionError(f"coordinate system and F disagree at {sol}")
    return ok


def sym_signs(sol: GenusThreeSolution, sr: int = 1, sq: int = 1) -> GenusThreeSolution:
    if sr not in (1, -1) or sq not in (1, -1):
        raise DomainError("signs must be +1 or -1")
    return GenusThreeSolution(sol.k, sr * sol.r, sq * sol.q)


def sym_k_inv(sol: GenusThreeSolution) -> GenusThreeSolution:
    if sol.k == 0:
        raise DomainError("k -> 1/k undefined at k = 0")
    return GenusThreeSolution(1 / sol.k, sol.r, sol.q)


def sym_r_inv(sol: GenusThreeSolution) -> GenusThreeSolution:
    if sol.r == 0:
        raise DomainError("r -> 1/r undefined at r = 0")
    return GenusThreeSolution(sol.k, 1 / sol.r, sol.q / sol.r)


def sym_prop4(sol: GenusThreeSolution, sign: int = 1) -> GenusThreeSolution:
    """Swap the roles of r and q, with the new k from the side-swap formula."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    k, r, q = sol.k, sol.r, sol.q
    den = k * k - 2 * k * r * r + 1
    if den == 0:
        raise DomainError(f"k^2 - 2kr^2 + 1 vanishes at {format_triple(sol)}")
    new_k = ((k * k + 1) * q * q + sign * (k * k - 1) * r * r) / den
    return GenusThreeSolution(new_k, q, r)


SYMMETRIES: dict[str, Callable[[GenusThreeSolution], GenusThreeSolution]] = {
    "neg-r": lambda s: sym_signs(s, -1, 1),
    "neg-q": lambda s: sym_signs(s, 1, -1),
    "k-inv": sym_k_inv,
    "r-inv": sym_r_inv,
    "prop4+": lambda s: sym_prop4(s, 1),
    "prop4-": lambda s: sym_prop4(s, -1),
}


def in_fundamental_domain(sol: GenusThreeSolution) -> bool:
    return 0 < sol.k < 1 and 0 < sol.r < 1 and sol.q > 0


def canonicalize(sol: GenusThreeSolution, max_depth: int = 4) -> tuple[GenusThreeSolution, list[str]]:
    """Breadth-first search over the symmetry maps for a triple with
    0 < k < 1, 0 < r < 1, q > 0.

    Returns the first such triple (ties broken by naive height) together with
    the chain of map names that reaches it.  Raises DomainError if none is
    found within ``max_depth`` steps.
    """
    if in_fundamental_domain(sol):
        return sol, []
    frontier = [(sol, [])]
    seen = {sol}
    for _ in range(max_depth):
        found = []
        nxt = []
        for cur, chain in frontier:
            for name, fn in SYMMETRIES.items():
                try:
                    new = fn(cur)
                except DomainError:
                    continue
                if new in seen:
                    continue
                seen.add(new)
                path = chain + [name]
                if in_fundamental_domain(new):
                    found.append((new.height(), len(found), new, path))
                nxt.append((new, path))
        if found:
            found.sort(key=lambda item: (item[0], item[1]))
            return found[0][2], found[0][3]
        frontier = nxt
    raise DomainError(f"no fundamental-domain representative within {max_depth} steps")


def solution_to_all_square_triangle(sol: GenusThreeSolution) -> IntTriangle:
    """Integer triangle (1, q^2, r^2) scaled so that all three sides stay squares."""
    if not sol.is_solution:
        raise DomainError(f"{format_triple(sol)} is not on the curve (F = {sol.residual})")
    if sol.r == 0 or sol.q == 0:
        raise DomainError(f"trivial solution {format_triple(sol)}")
    sides = (Fraction(1), sol.q**2, sol.r**2)
    if heron_sixteen_area_sq(*sides) <= 0:
        raise DomainError(f"degenerate triangle from {format_triple(sol)}")
    return normalize_preserving_squares(RationalTriangle(*sides), (0, 1, 2))


def format_triple(sol: GenusThreeSolution) -> str:
    return f"(k={format_rational(sol.k)}, r={format_rational(sol.r)}, q={format_rational(sol.q)})"


def verification_report(sol: GenusThreeSolution) -> dict:
    rec = {
        "k": format_rational(sol.k),
        "r": format_rational(sol.r),
        "q": format_rational(sol.q),
        "F_value": format_rational(sol.residual),
        "is_solution": sol.is_solution,
        "triangle": None,
    }
    try:
        rec["triangle"] = solution_to_all_square_triangle(sol).to_record()
    except DomainError:
        pass
    return rec
