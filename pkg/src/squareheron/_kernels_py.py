"""Pure-Python search kernels.  Same signatures as the compiled ``_kernels``."""

from __future__ import annotations

from math import gcd, isqrt

_M = 64 * 63 * 65 * 11
_Q64 = bytes(1 if any(i * i % 64 == r for i in range(64)) else 0 for r in range(64))
_Q63 = bytes(1 if any(i * i % 63 == r for i in range(63)) else 0 for r in range(63))
_Q65 = bytes(1 if any(i * i % 65 == r for i in range(65)) else 0 for r in range(65))
_Q11 = bytes(1 if any(i * i % 11 == r for i in range(11)) else 0 for r in range(11))


def two_square_hits(p_lo: int, p_hi: int, max_side: int) -> list[tuple[int, int, int, int]]:
    """Raw Heron hits (p, q, c, area) with sides (p^2, q^2, c).

    p_lo <= p <= p_hi, q >= p, q^2 <= max_side, 1 <= c <= max_side.
    """
    out = []
    q64, q63, q65, q11 = _Q64, _Q63, _Q65, _Q11
    p = max(p_lo, 1)
    while p <= p_hi and p * p <= max_side:
        a = p * p
        q = p
        while q * q <= max_side:
            b = q * q
            s = a + b
            d = b - a
            s2 = s * s
            d2 = d * d
            c_hi = min(s - 1, max_side)
            for c in range(d + 1, c_hi + 1):
                c2 = c * c
                prod = (s2 - c2) * (c2 - d2)
                r = prod % _M
                if not (q64[r & 63] and q63[r % 63] and q65[r % 65] and q11[r % 11]):
                    continue
                root = isqrt(prod)
                if root * root == prod and root % 4 == 0:
                    out.append((p, q, c, root // 4))
            q += 1
        p += 1
    return out


def weierstrass_x_hits(a_num: int, a_den: int, u_lo: int, u_hi: int, w_max: int) -> list[tuple[int, int, int]]:
    """Hits (u, w, root) on Y^2 = X^3 + (a_num/a_den) X with X = u/w^2.

    gcd(u, w) = 1, max(u_lo, 0) <= u <= u_hi, 1 <= w <= w_max, and
    root^2 = a_den * (a_den*u^3 + a_num*u*w^4), so Y = +-root / (a_den * w^3).
    Requires a_num/a_den > 0 (negative u never gives a point then).
    """
    out = []
    q64, q63, q65, q11 = _Q64, _Q63, _Q65, _Q11
    for w in range(1, w_max + 1):
        w4 = a_num * w**4
        for u in range(max(u_lo, 0), u_hi + 1):
            if gcd(u, w) != 1:
                continue
            val = a_den * u * (a_den * u * u + w4)
            r = val % _M
            if not (q64[r & 63] and q63[r % 63] and q65[r % 65] and q11[r % 11]):
                continue
            root = isqrt(val)
            if root * root == val:
                out.append((u, w, root))
    return out
