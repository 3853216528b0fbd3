"""Exact tools for Heron triangles with perfect-square sides."""

from ._core import BACKEND
from .exact import DomainError, ConsistencyError, gcd3, is_perfect_square, isqrt
from .triangle import IntTriangle, RationalTriangle, classify, heron_sixteen_area_sq, normalize_preserving_squares
from .genus3 import GenusThreeSolution, eval_F
from .elliptic import CurveK, ECPoint, INFINITY, forward_map, inverse_map, point_to_triangle, canonical_point
from .families import ParamRatio, primitive_family_triangle, isosceles_family
from .search import SearchBounds, enumerate_two_square_heron, find_points, rank0_desk_check
from .corpus import verify_corpus

__version__ = "0.1.0"
