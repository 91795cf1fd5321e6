# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled 64-bit kernel: the hot paths of every test.

Same functions and semantics as ``primekit._pykernel``; products and square
comparisons go through 128-bit intermediates so the full uint64 range is
safe. Stage-carrying logic stays in the Python layer; these return bools.
"""

from libc.stdint cimport uint64_t
from libc.math cimport sqrt as c_sqrt

cdef extern from *:
    ctypedef unsigned long long u128 "__uint128_t"

BACKEND_NAME = "c"
DEFAULT_SEARCH_CAP = 1000
U64_MAX = 18446744073709551615


cdef inline uint64_t _mulmod(uint64_t a, uint64_t b, uint64_t m) noexcept nogil:
    return <uint64_t>((<u128>a * b) % m)


cdef inline uint64_t _powmod(uint64_t a, uint64_t e, uint64_t m) noexcept nogil:
    cdef uint64_t res = 1 % m
    a = a % m
    while e:
        if e & 1:
            res = _mulmod(res, a, m)
        a = _mulmod(a, a, m)
        e >>= 1
    return res


cdef inline uint64_t _isqrt(uint64_t n) noexcept nogil:
    # float seed, then exact correction; the seed can be off by a few ulps
    # near 2^64
    cdef uint64_t s
    if n == 0:
        return 0
    s = <uint64_t>c_sqrt(<double>n)
    if s > 4294967295ULL:
        s = 4294967295ULL
    while <u128>s * s > <u128>n:
        s -= 1
    while <u128>(s + 1) * (s + 1) <= <u128>n:
        s += 1
    return s


cdef inline bint _is_small_prime(uint64_t p) noexcept nogil:
    cdef uint64_t d, lim
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    lim = _isqrt(p)
    d = 3
    while d <= lim:
        if p % d == 0:
            return False
        d += 2
    return True


cdef int _search(uint64_t n, uint64_t first, uint64_t step, uint64_t cap,
                 uint64_t* out) noexcept nogil:
    # 1 found, 2 divisor of n, 3 candidate == n (prime), 0 exhausted
    cdef uint64_t c = first, seen = 0, v
    while seen < cap:
        seen += 1
        if _is_small_prime(c):
            v = _powmod(n % c, (c - 1) >> 1, c)
            if v == c - 1:
                out[0] = c
                return 1
            if v == 0:
                out[0] = c
                return 3 if c == n else 2
        c += step
    return 0


cdef bint _sprp(uint64_t n, uint64_t a, uint64_t s, uint64_t t) noexcept nogil:
    cdef uint64_t b = _powmod(a, t, n)
    cdef uint64_t k, j
    for j in range(s):
        k = _mulmod(b, b, n)
        if k == 1 and b != 1 and b != n - 1:
            return False
        b = k
    return b == 1


cdef inline void _decompose(uint64_t n, uint64_t* s, uint64_t* t) noexcept nogil:
    s[0] = 0
    t[0] = n - 1
    while not (t[0] & 1):
        s[0] += 1
        t[0] >>= 1


cdef int _ge(uint64_t n, uint64_t cap) noexcept nogil:
    # 1 prime, 0 composite, -1 search cap exceeded
    cdef uint64_t e, want, m, h, q, p, i
    cdef uint64_t bases[4]
    cdef int status
    if n < 2:
        return 0
    if n == 2:
        return 1
    if n % 2 == 0:
        return 0
    if n < 100:
        return 1 if _is_small_prime(n) else 0
    e = (n - 1) >> 1
    want = 1 if (n % 8 == 1 or n % 8 == 7) else n - 1
    if _powmod(2, e, n) != want:
        return 0
    m = _isqrt(n)
    h = _isqrt(n >> 1)
    bases[0] = m
    bases[1] = m + 1
    bases[2] = h
    bases[3] = h + 1
    for i in range(4):
        q = _powmod(bases[i], e, n)
        if q != 1 and q != n - 1:
            return 0
    # smallest 8k+5 then 8k+1 prime p with (n/p) = -1; each must give n-1
    bases[0] = 5
    bases[1] = 17
    for i in range(2):
        status = _search(n, bases[i], 8, cap, &p)
        if status == 0:
            return -1
        if status == 2:
            return 0
        if status == 3:
            return 1
        if _powmod(p, e, n) != n - 1:
            return 0
    return 1


cdef int _mrge(uint64_t n, uint64_t cap) noexcept nogil:
    cdef uint64_t m, h, s, t, p, i
    cdef uint64_t bases[5]
    cdef int status
    if n < 2:
        return 0
    if n == 2:
        return 1
    if n % 2 == 0:
        return 0
    if n < 9:
        return 1  # 3, 5, 7
    m = _isqrt(n)
    if m * m == n:
        return 0
    h = _isqrt(n >> 1)
    _decompose(n, &s, &t)
    bases[0] = 2
    bases[1] = m - 1
    bases[2] = m + 1
    bases[3] = h - 1
    bases[4] = h + 1
    for i in range(5):
        if not _sprp(n, bases[i], s, t):
            return 0
    status = _search(n, 3, 4, cap, &p)
    if status == 0:
        return -1
    if status == 2:
        return 0
    if status == 3:
        return 1
    if _powmod(p, (n - 1) >> 1, n) != (n - 1 if n % 4 == 1 else 1):
        return 0
    return 1


cdef int _first(uint64_t n, uint64_t cap) noexcept nogil:
    cdef uint64_t m, h, s, t, p, i
    cdef uint64_t bases[5]
    cdef int status
    if n < 2:
        return 0
    if n == 2:
        return 1
    if n % 2 == 0:
        return 0
    if n < 9:
        return 1
    m = _isqrt(n)
    h = _isqrt(n >> 1)
    _decompose(n, &s, &t)
    bases[0] = 2
    bases[1] = m
    bases[2] = m + 1
    bases[3] = h
    bases[4] = h + 1
    for i in range(5):
        if not _sprp(n, bases[i], s, t):
            return 0
    status = _search(n, 5, 4, cap, &p)
    if status == 0:
        return -1
    if status == 2:
        return 0
    if status == 3:
        return 1
    if _powmod(p, (n - 1) >> 1, n) != n - 1:
        return 0
    return 1


cdef bint _mr7(uint64_t n) noexcept nogil:
    cdef uint64_t m, h, s, t, i
    cdef uint64_t bases[7]
    if n == 17:
        return True
    if n < 9:
        return n == 2 or n == 3 or n == 5 or n == 7
    if n % 2 == 0:
        return False
    m = _isqrt(n)
    h = _isqrt(n >> 1)
    _decompose(n, &s, &t)
    bases[0] = 2
    bases[1] = 5
    bases[2] = 17
    bases[3] = m
    bases[4] = m + 1
    bases[5] = h
    bases[6] = h + 1
    for i in range(7):
        if not _sprp(n, bases[i] % n, s, t):
            return False
    return True


cdef uint64_t _ORACLE[12]
_ORACLE[0] = 2; _ORACLE[1] = 3; _ORACLE[2] = 5; _ORACLE[3] = 7
_ORACLE[4] = 11; _ORACLE[5] = 13; _ORACLE[6] = 17; _ORACLE[7] = 19
_ORACLE[8] = 23; _ORACLE[9] = 29; _ORACLE[10] = 31; _ORACLE[11] = 37


cdef bint _oracle(uint64_t n) noexcept nogil:
    cdef uint64_t s, t, i
    if n < 2:
        return False
    for i in range(12):
        if n % _ORACLE[i] == 0:
            return n == _ORACLE[i]
    _decompose(n, &s, &t)
    for i in range(12):
        if not _sprp(n, _ORACLE[i], s, t):
            return False
    return True


def mulmod(uint64_t a, uint64_t b, uint64_t m):
    """(a * b) % m with a 128-bit product; exact over the full u64 range."""
    if m == 0:
        raise ValueError("modulus must be >= 1")
    return _mulmod(a, b, m)


def powmod(uint64_t a, uint64_t e, uint64_t m):
    """a**e % m by square-and-multiply over 128-bit products."""
    if m == 0:
        raise ValueError("modulus must be >= 1")
    return _powmod(a, e, m)


def isqrt64(uint64_t n):
    """Exact floor square root of a u64."""
    return _isqrt(n)


def ge_is_prime(uint64_t n, uint64_t cap=1000):
    cdef int r = _ge(n, cap)
    if r < 0:
        raise RuntimeError("nonresidue search exceeded its candidate cap")
    return r == 1


def mrge_is_prime(uint64_t n, uint64_t cap=1000):
    cdef int r = _mrge(n, cap)
    if r < 0:
        raise RuntimeError("nonresidue search exceeded its candidate cap")
    return r == 1


def first_attempt_is_prime(uint64_t n, uint64_t cap=1000):
    cdef int r = _first(n, cap)
    if r < 0:
        raise RuntimeError("nonresidue search exceeded its candidate cap")
    return r == 1


def mr7_is_prime(uint64_t n):
    return _mr7(n)


def oracle_is_prime(uint64_t n):
    return _oracle(n)
