import pytest

from primekit.residues import (
    ABORT,
    DIVISOR,
    EXHAUSTED,
    FORM_4K1,
    FORM_4K3,
    FORM_8K1,
    FORM_8K5,
    FOUND,
    SELF_PRIME,
    SKIP,
    Form,
    is_small_prime,
    legendre,
    legendre_two,
    required_euler_residue,
    smallest_nonresidue_prime,
)


def test_is_small_prime_examples():
    assert is_small_prime(2)
    assert not is_small_prime(1)
    assert not is_small_prime(9)
    assert is_small_prime(29)
    assert not is_small_prime(91)  # 7 * 13


def test_is_small_prime_matches_sieve(sieve_bytes):
    bm = sieve_bytes(10**4)
    for n in range(10**4 + 1):
        assert is_small_prime(n) == (bm[n] == 1)


def test_form_rendering_and_candidates():
    assert str(FORM_8K5) == "8k+5"
    assert str(FORM_4K3) == "4k+3"
    assert FORM_4K1.first_candidate == 5
    assert FORM_4K3.first_candidate == 3
    assert FORM_8K1.first_candidate == 17
    assert FORM_8K5.first_candidate == 5


def test_form_validation():
    with pytest.raises(ValueError):
        Form(6, 1, 7)  # modulus not 4 or 8
    with pytest.raises(ValueError):
        Form(8, 2, 2)  # even residue
    with pytest.raises(ValueError):
        Form(8, 5, 7)  # 7 not congruent 5 mod 8
    with pytest.raises(ValueError):
        Form(8, 1, 33)  # 33 = 3 * 11 not prime


def test_legendre_known_values():
    assert legendre(1729, 5) == 1
    assert legendre(1729, 13) == 0
    assert legendre(1729, 17) == -1
    assert legendre(46657, 5) == -1
    assert legendre(6164578258027337, 17) == -1
    assert legendre(6164578258027337, 5) == -1


def test_legendre_rejects_even_modulus():
    with pytest.raises(ValueError):
        legendre(10, 2)


def test_legendre_against_explicit_residue_sets(sieve_bytes):
    # quick version; the full sweep over p < 10^4 runs in the acceptance suite
    bm = sieve_bytes(300)
    for p in range(3, 300, 2):
        if bm[p] != 1:
            continue
        squares = {x * x % p for x in range(1, p)}
        assert len(squares) == (p - 1) // 2
        for a in range(1, p):
            want = 1 if a in squares else -1
            assert legendre(a, p) == want


def test_reciprocity_product_small(sieve_bytes):
    bm = sieve_bytes(100)
    primes = [p for p in range(3, 100, 2) if bm[p] == 1]
    for p in primes:
        for q in primes:
            if p == q:
                continue
            sign = (-1) ** (((p - 1) // 2) * ((q - 1) // 2))
            assert legendre(p, q) * legendre(q, p) == sign


def test_legendre_two_rule(sieve_bytes):
    bm = sieve_bytes(10**4)
    for p in range(3, 10**4, 2):
        if bm[p] == 1:
            assert legendre_two(p) == legendre(2, p)
    with pytest.raises(ValueError):
        legendre_two(10)


def test_search_walk_1729():
    # candidates 5 (+1), 13 (0, passed over), 17 (-1)
    res = smallest_nonresidue_prime(1729, FORM_4K1, SKIP)
    assert res.status == FOUND and res.prime == 17


def test_search_known_hits():
    assert smallest_nonresidue_prime(46657, FORM_8K5, SKIP).prime == 5
    assert smallest_nonresidue_prime(6164578258027337, FORM_8K1, SKIP).prime == 17


def test_search_square_exhausts():
    for form in (FORM_4K1, FORM_4K3, FORM_8K5, FORM_8K1):
        res = smallest_nonresidue_prime(25, form, SKIP, cap=50)
        assert res.status == EXHAUSTED
        assert res.inspected == 50


def test_search_abort_reports_divisor():
    res = smallest_nonresidue_prime(1729, FORM_4K1, ABORT)
    assert res.status == DIVISOR and res.prime == 13


def test_search_abort_self_prime():
    res = smallest_nonresidue_prime(5, FORM_8K5, ABORT)
    assert res.status == SELF_PRIME and res.prime == 5


def test_search_skip_walks_past_n():
    res = smallest_nonresidue_prime(5, FORM_4K1, SKIP)
    assert res.status == FOUND and res.prime == 13


def test_search_rejects_unknown_policy():
    with pytest.raises(ValueError):
        smallest_nonresidue_prime(35, FORM_4K1, "maybe")


def test_abort_found_never_divides(sieve_bytes):
    # an abort search must never report "found" for a prime dividing n
    bm = sieve_bytes(3000)
    for n in range(9, 3000, 2):
        if bm[n] == 1 or is_small_prime(n):
            continue
        for form in (FORM_4K1, FORM_4K3, FORM_8K5, FORM_8K1):
            res = smallest_nonresidue_prime(n, form, ABORT, cap=200)
            if res.status == FOUND:
                assert n % res.prime != 0


def test_required_euler_residue_table():
    # p = 4k+1: always n-1; p = 4k+3: n-1 iff n = 4k+1
    assert required_euler_residue(46657, 5) == 46656
    assert required_euler_residue(46657, 17) == 46656
    assert required_euler_residue(13, 7) == 12  # n = 1 mod 4, p = 3 mod 4
    assert required_euler_residue(19, 7) == 1  # n = 3 mod 4, p = 3 mod 4


def test_required_euler_residue_matches_actual_primes(sieve_bytes):
    # for genuine primes n, the table must equal the computed half-power
    # whenever (n/p) = -1
    bm = sieve_bytes(2000)
    small = [p for p in range(3, 60, 2) if bm[p] == 1]
    for n in range(9, 2000, 2):
        if bm[n] != 1:
            continue
        for p in small:
            if p != n and legendre(n, p) == -1:
                assert pow(p, (n - 1) // 2, n) == required_euler_residue(n, p)
