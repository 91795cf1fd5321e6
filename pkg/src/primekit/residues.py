"""Legendre symbols against small primes and residue-class prime searches.

The deterministic tests repeatedly need the smallest prime p in an
arithmetic progression (4k+1, 8k+5, ...) such that n is a quadratic
non-residue mod p. Candidates are enumerated along the progression and
checked for primality by trial division each time; the symbol (n/p) is then
evaluated by Euler's criterion modulo the small p, which is cheap because p
stays tiny in practice.
"""

import math
from dataclasses import dataclass

DEFAULT_SEARCH_CAP = 1000

# divisor_policy values for smallest_nonresidue_prime
SKIP = "skip"
ABORT = "abort"

# SearchResult.status values
FOUND = "found"
DIVISOR = "divisor"
SELF_PRIME = "self-prime"
EXHAUSTED = "exhausted"


def is_small_prime(p: int) -> bool:
    """Primality by trial division up to isqrt(p). Meant for small p."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    lim = math.isqrt(p)
    d = 3
    while d <= lim:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Form:
    """Arithmetic progression modulus*k + residue that auxiliary primes are
    drawn from, starting at its smallest prime member."""

    modulus: int
    residue: int
    first_candidate: int

    def __post_init__(self):
        if self.modulus not in (4, 8):
            raise ValueError("form modulus must be 4 or 8")
        if not 0 < self.residue < self.modulus or self.residue % 2 == 0:
            raise ValueError("form residue must be odd and < modulus")
        if self.first_candidate % self.modulus != self.residue:
            raise ValueError("first candidate not in the progression")
        if not is_small_prime(self.first_candidate):
            raise ValueError("first candidate must be prime")

    def __str__(self) -> str:
        return f"{self.modulus}k+{self.residue}"


FORM_4K1 = Form(4, 1, 5)
FORM_4K3 = Form(4, 3, 3)
FORM_8K1 = Form(8, 1, 17)
FORM_8K3 = Form(8, 3, 3)
FORM_8K5 = Form(8, 5, 5)
FORM_8K7 = Form(8, 7, 7)


def legendre(n: int, p: int) -> int:
    """Legendre symbol (n/p) for an odd prime p: +1, -1, or 0 when p | n.

    Evaluated as (n mod p)^((p-1)/2) mod p; the caller guarantees p is an
    odd prime (see is_small_prime).
    """
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    v = pow(n % p, (p - 1) // 2, p)
    if v == p - 1:
        return -1
    return v  # 0 or +1 for prime p


def legendre_two(n: int) -> int:
    """(2/n) for odd n by the mod-8 rule: +1 iff n % 8 in {1, 7}.

    For prime n this is the sign that 2^((n-1)/2) must take mod n.
    """
    if n % 2 == 0:
        raise ValueError("n must be odd")
    return 1 if n % 8 in (1, 7) else -1


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a residue-class nonresidue-prime search.

    status:
      found      -- prime with (n/prime) = -1
      divisor    -- candidate prime divides n and is < n (so n is composite)
      self-prime -- the candidate reached n itself; trial division has then
                    proven n prime
      exhausted  -- cap candidates inspected without a hit (pathological
                    input, e.g. an undetected perfect square)
    """

    status: str
    prime: int | None
    inspected: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


def smallest_nonresidue_prime(
    n: int,
    form: Form,
    divisor_policy: str = SKIP,
    cap: int = DEFAULT_SEARCH_CAP,
) -> SearchResult:
    """Smallest prime p in the form's progression with legendre(n, p) = -1.

    Expects odd n > 1 that is not a perfect square. Candidates with
    legendre(n, p) = 0 (p divides n) are passed over under policy ``skip``;
    under policy ``abort`` they end the search immediately, as a ``divisor``
    outcome when p < n or as ``self-prime`` when p = n. ``exhausted`` after
    ``cap`` inspected candidates must be treated as a hard failure by
    callers, never as a verdict.
    """
    if divisor_policy not in (SKIP, ABORT):
        raise ValueError(f"unknown divisor policy: {divisor_policy!r}")
    candidate = form.first_candidate
    inspected = 0
    while inspected < cap:
        inspected += 1
        if is_small_prime(candidate):
            symbol = legendre(n, candidate)
            if symbol == -1:
                return SearchResult(FOUND, candidate, inspected)
            if symbol == 0 and divisor_policy == ABORT:
                status = SELF_PRIME if candidate == n else DIVISOR
                return SearchResult(status, candidate, inspected)
        candidate += form.modulus
    return SearchResult(EXHAUSTED, None, inspected)


def required_euler_residue(n: int, p: int) -> int:
    """Residue p^((n-1)/2) must take mod n, for prime n with (n/p) = -1.

    Quadratic reciprocity fixes the sign of (p/n): for p = 4k+1 the symbol
    is -1 outright; for p = 4k+3 it is -1 exactly when n = 4k+1. Returned
    as the concrete residue, n-1 or 1.
    """
    if p % 4 == 1 or n % 4 == 1:
        return n - 1
    return 1
