import random

import pytest

from primekit.sprp import (
    FIRST_ATTEMPT_SCHEDULE,
    MR_GE_SCHEDULE,
    ORACLE_BASES,
    SEVEN_BASE_SCHEDULE,
    Literal,
    SqrtDerived,
    decompose,
    mr_with_schedule,
    reference_oracle64,
    resolve_base,
    seven_base_variant,
    sprp_round,
)
from primekit.verdicts import MR_ROUND, SMALL_PRIME_SCREEN


def test_decompose_examples():
    assert (decompose(9).s, decompose(9).t) == (3, 1)
    assert (decompose(561).s, decompose(561).t) == (4, 35)
    assert (decompose(341).s, decompose(341).t) == (2, 85)


def test_decompose_rejects_bad_input():
    for n in (0, 1, 2, 4, 100):
        with pytest.raises(ValueError):
            decompose(n)


def test_decompose_recompose_random():
    rng = random.Random(7)
    for _ in range(10**6):
        n = 2 * rng.randrange(1, 1 << 63) + 1
        d = decompose(n)
        assert d.t % 2 == 1
        assert (d.t << d.s) + 1 == n


def test_sprp_round_known_cases():
    assert sprp_round(2047, 2)  # 23 * 89, the classic base-2 strong liar
    assert not sprp_round(341, 2)
    assert not sprp_round(561, 2)


def test_plus_minus_one_always_pass():
    for n in range(3, 10**4, 2):
        d = decompose(n)
        assert sprp_round(n, 1, d)
        assert sprp_round(n, n - 1, d)


def test_primes_pass_every_base(sieve_bytes):
    bm = sieve_bytes(300)
    for p in range(3, 300, 2):
        if bm[p] != 1:
            continue
        d = decompose(p)
        for a in range(1, p):
            assert sprp_round(p, a, d)


def test_primes_pass_sampled_bases(sieve_bytes):
    bm = sieve_bytes(10**4)
    rng = random.Random(3)
    for p in range(301, 10**4, 2):
        if bm[p] != 1:
            continue
        d = decompose(p)
        for _ in range(20):
            assert sprp_round(p, rng.randrange(1, p), d)


def test_schedule_shapes():
    assert len(SEVEN_BASE_SCHEDULE) == 7
    assert len(MR_GE_SCHEDULE) == 5
    assert len(FIRST_ATTEMPT_SCHEDULE) == 5
    assert SEVEN_BASE_SCHEDULE[:3] == (Literal(2), Literal(5), Literal(17))


def test_resolve_base():
    assert resolve_base(Literal(17), 10**9) == 17
    assert resolve_base(SqrtDerived(1, 0), 46657) == 216
    assert resolve_base(SqrtDerived(2, 1), 46657) == 153
    assert resolve_base(SqrtDerived(2, -1), 46657) == 151


def test_mr_with_schedule_base2_kills_561():
    v = mr_with_schedule(561, (Literal(2),))
    assert not v.is_prime
    assert v.stage.kind == MR_ROUND and v.stage.base == 2


def test_mr_with_schedule_documented_false_positive():
    assert mr_with_schedule(33077785078626881, SEVEN_BASE_SCHEDULE).is_prime


def test_mr_with_schedule_large_prime():
    assert mr_with_schedule(10**18 + 3, SEVEN_BASE_SCHEDULE).is_prime


def test_mr_with_schedule_base_one_passes():
    # isqrt(11 // 2) - 1 == 1: a legal, trivially passing base
    assert resolve_base(SqrtDerived(2, -1), 11) == 1
    assert mr_with_schedule(11, (SqrtDerived(2, -1),)).is_prime


def test_seven_base_small_screens():
    assert seven_base_variant(17).is_prime
    assert seven_base_variant(17).stage.kind == SMALL_PRIME_SCREEN
    for n in (2, 3, 5, 7):
        assert seven_base_variant(n).is_prime
    for n in (0, 1, 4, 6, 8, 9, 100):
        assert not seven_base_variant(n).is_prime


def test_seven_base_matches_sieve(sieve_bytes):
    bm = sieve_bytes(10**5)
    for n in range(10**5):
        assert seven_base_variant(n).is_prime == (bm[n] == 1), n


def test_mr_with_schedule_first_four_primes_vs_sieve(sieve_bytes):
    # the classic [2, 3, 5, 7] schedule is exact far beyond this range
    bm = sieve_bytes(10**6)
    schedule = (Literal(2), Literal(3), Literal(5), Literal(7))
    for n in range(3, 10**6, 2):
        assert mr_with_schedule(n, schedule).is_prime == (bm[n] == 1), n


def test_oracle_examples():
    assert reference_oracle64(2).is_prime
    assert not reference_oracle64(6164578258027337).is_prime
    assert not reference_oracle64(17364052083370132981).is_prime


def test_oracle_matches_sieve(sieve_bytes):
    bm = sieve_bytes(10**5)
    for n in range(10**5):
        assert reference_oracle64(n).is_prime == (bm[n] == 1), n


def test_oracle_base_set_is_first_twelve_primes():
    assert ORACLE_BASES == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def test_u64_range_enforced():
    with pytest.raises(OverflowError):
        seven_base_variant(2**64)
    with pytest.raises(OverflowError):
        reference_oracle64(2**64)
