# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; mirrors _kernels_py exactly.

Hot loops run on unsigned 128-bit integers.  Callers whose values could
exceed 2**126 get OverflowError and must use the Python kernels.
"""

cdef extern from *:
    """
    #include <stdint.h>
    #include <math.h>
    typedef unsigned __int128 sh_u128;
    #define SH_RESIDUE_MOD 2882880u
    static unsigned char sh_q64[64], sh_q63[63], sh_q65[65], sh_q11[11];

    static void sh_init_tables(void) {
        unsigned i;
        for (i = 0; i < 64; i++) sh_q64[(i * i) % 64] = 1;
        for (i = 0; i < 63; i++) sh_q63[(i * i) % 63] = 1;
        for (i = 0; i < 65; i++) sh_q65[(i * i) % 65] = 1;
        for (i = 0; i < 11; i++) sh_q11[(i * i) % 11] = 1;
    }

    static inline int sh_maybe_square(sh_u128 n) {
        unsigned r = (unsigned)(n % SH_RESIDUE_MOD);
        return sh_q64[r & 63] && sh_q63[r % 63] && sh_q65[r % 65] && sh_q11[r % 11];
    }

    /* floor(sqrt(n)) for n < 2^126 */
    static inline uint64_t sh_isqrt(sh_u128 n) {
        uint64_t r = (uint64_t)sqrtl((long double)n);
        while ((sh_u128)r * r > n) r--;
        while ((sh_u128)(r + 1) * (r + 1) <= n) r++;
        return r;
    }

    static inline uint64_t sh_gcd(uint64_t a, uint64_t b) {
        while (b) { uint64_t t = a % b; a = b; b = t; }
        return a;
    }
    """
    ctypedef unsigned long long u128 "sh_u128"
    void sh_init_tables()
    bint sh_maybe_square(u128 n) nogil
    unsigned long long sh_isqrt(u128 n) nogil
    unsigned long long sh_gcd(unsigned long long a, unsigned long long b) nogil

sh_init_tables()

_LIMIT = 1 << 126


def two_square_hits(long long p_lo, long long p_hi, long long max_side):
    """Raw Heron hits (p, q, c, area) with sides (p^2, q^2, c)."""
    if max_side >= (1 << 30):
        raise OverflowError("max_side too large for the 128-bit kernel")
    cdef list out = []
    cdef long long p, q, c, a, b, s, d, c_hi
    cdef u128 s2, d2, c2, prod
    cdef unsigned long long root
    p = p_lo if p_lo > 1 else 1
    while p <= p_hi and p * p <= max_side:
        a = p * p
        q = p
        while q * q <= max_side:
            b = q * q
            s = a + b
            d = b - a
            s2 = <u128>s * <u128>s
            d2 = <u128>d * <u128>d
            c_hi = s - 1 if s - 1 < max_side else max_side
            c = d + 1
            while c <= c_hi:
                c2 = <u128>c * <u128>c
                prod = (s2 - c2) * (c2 - d2)
                if sh_maybe_square(prod):
                    root = sh_isqrt(prod)
                    if <u128>root * <u128>root == prod and root % 4 == 0:
                        out.append((p, q, c, root // 4))
                c += 1
            q += 1
        p += 1
    return out


def weierstrass_x_hits(a_num, a_den, long long u_lo, long long u_hi, long long w_max):
    """Hits (u, w, root) on Y^2 = X^3 + (a_num/a_den) X with X = u/w^2."""
    if a_num <= 0 or a_den <= 0:
        raise ValueError("a must be positive")
    if u_lo < 0:
        u_lo = 0
    if u_hi < u_lo or w_max < 1:
        return []
    if a_den * u_hi * (a_den * u_hi * u_hi + a_num * w_max ** 4) >= _LIMIT:
        raise OverflowError("bounds too large for the 128-bit kernel")
    cdef unsigned long long an = a_num, ad = a_den
    cdef long long u, w
    cdef u128 w4, val
    cdef unsigned long long root
    cdef list out = []
    for w in range(1, w_max + 1):
        w4 = <u128>an * <u128>w * <u128>w * <u128>w * <u128>w
        for u in range(u_lo, u_hi + 1):
            if sh_gcd(<unsigned long long>u, <unsigned long long>w) != 1:
                continue
            val = <u128>ad * <u128>u * (<u128>ad * <u128>u * <u128>u + w4)
            if sh_maybe_square(val):
                root = sh_isqrt(val)
                if <u128>root * <u128>root == val:
                    out.append((u, w, root))
    return out
