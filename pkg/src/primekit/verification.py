"""Ground-truth oracles and systematic cross-checking.

Ground truth comes from a sieve (desk-scale ranges) or from the fixed
twelve-base reference oracle (random 64-bit samples); the tests under study
are never their own referee. Mismatches are emitted as JSON lines with
fields {"n", "algo", "expected", "actual", "stage"}, n as a decimal string.
"""

import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernel
from .bigrecipes import recipe256, recipe2048
from .detprime64 import gauss_euler, mr_ge, mr_ge_first_attempt
from .sprp import decompose, reference_oracle64, seven_base_variant, sprp_round

U64_MAX = 2**64 - 1

# rich (stage-carrying) implementations, for diagnosing any mismatch
RICH_ALGORITHMS = {
    "ge": gauss_euler,
    "mrge": mr_ge,
    "first": mr_ge_first_attempt,
    "mr7": seven_base_variant,
    "oracle": reference_oracle64,
}


class CheckpointError(RuntimeError):
    """Checkpoint file is corrupt or belongs to a different search layout;
    resuming is refused and an explicit restart is required."""


@dataclass(frozen=True)
class MismatchRecord:
    n: int
    algo: str
    expected: str  # "prime" | "composite"
    actual: str
    stage: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": str(self.n),
                "algo": self.algo,
                "expected": self.expected,
                "actual": self.actual,
                "stage": self.stage,
            }
        )


class PrimeSieve:
    """Eratosthenes primality bitmap for all n <= limit."""

    def __init__(self, limit: int, memory_limit_bytes: int = 2**31):
        if limit < 0:
            raise ValueError("limit must be >= 0")
        if limit + 1 > memory_limit_bytes:
            raise ValueError(
                f"sieve of limit {limit} exceeds the memory budget "
                f"({memory_limit_bytes} bytes)"
            )
        flags = np.ones(limit + 1, dtype=bool)
        flags[: min(2, limit + 1)] = False
        for p in range(2, math.isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = False
        self.limit = limit
        self._flags = flags

    def is_prime(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise ValueError("n outside the sieved range")
        return bool(self._flags[n])

    def count(self) -> int:
        return int(np.count_nonzero(self._flags))

    def primes(self) -> np.ndarray:
        return np.flatnonzero(self._flags)

    def as_bytes(self) -> bytes:
        """One byte per n (0/1); bytes indexing is the fastest lookup in
        tight Python loops."""
        return self._flags.tobytes()


def sieve(limit: int, memory_limit_bytes: int = 2**31) -> PrimeSieve:
    return PrimeSieve(limit, memory_limit_bytes)


def _algo_callable(algo: str, cap: int | None):
    try:
        fn = kernel.ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm: {algo!r}") from None
    if cap is None or algo not in kernel.CAPPED:
        return fn
    return lambda n: fn(n, cap)


def _stage_of(algo: str, n: int, cap: int | None) -> str:
    rich = RICH_ALGORITHMS[algo]
    if cap is not None and algo in ("ge", "mrge", "first"):
        return rich(n, cap=cap).stage.describe()
    return rich(n).stage.describe()


def _record(algo: str, n: int, expected_prime: bool, actual_prime: bool,
            cap: int | None) -> MismatchRecord:
    return MismatchRecord(
        n=n,
        algo=algo,
        expected="prime" if expected_prime else "composite",
        actual="prime" if actual_prime else "composite",
        stage=_stage_of(algo, n, cap),
    )


# --- exhaustive sweep against the sieve -----------------------------------

_worker_sieves: dict[int, bytes] = {}


def _sieve_bytes(limit: int) -> bytes:
    bm = _worker_sieves.get(limit)
    if bm is None:
        bm = PrimeSieve(limit).as_bytes()
        _worker_sieves[limit] = bm
    return bm


def _scan_exhaustive(algo: str, lo: int, hi: int, limit: int, cap: int | None):
    """Worker: return ns in [lo, hi] (odd, plus 2) where algo != sieve."""
    fn = _algo_callable(algo, cap)
    bm = _sieve_bytes(limit)
    bad = []
    if lo <= 2 <= hi:
        if fn(2) != (bm[2] == 1):
            bad.append(2)
    n = lo if lo % 2 == 1 else lo + 1
    if n < 3:
        n = 3
    while n <= hi:
        if fn(n) != (bm[n] == 1):
            bad.append(n)
        n += 2
    return bad


def exhaustive_verify(
    algo: str, limit: int, jobs: int = 1, cap: int | None = None
) -> list[MismatchRecord]:
    """Run ``algo`` on n = 2 and every odd n in [3, limit]; compare each
    verdict with the sieve. Returns all mismatches (expected: none)."""
    _algo_callable(algo, cap)  # validate algo up front
    if limit < 2:
        return []
    _sieve_bytes(limit)  # build in the parent so forked workers share it
    sv = _sieve_bytes(limit)
    chunks = _split_range(2, limit, max(jobs, 1) * 4)
    if jobs <= 1:
        bad = []
        for lo, hi in chunks:
            bad.extend(_scan_exhaustive(algo, lo, hi, limit, cap))
    else:
        bad = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futs = [
                pool.submit(_scan_exhaustive, algo, lo, hi, limit, cap)
                for lo, hi in chunks
            ]
            for f in futs:
                bad.extend(f.result())
    return [_record(algo, n, sv[n] == 1, not (sv[n] == 1), cap) for n in sorted(bad)]


# --- random sampling against the reference oracle --------------------------


def random_odd_u64(rng: random.Random) -> int:
    """Uniform odd integer in [3, 2^64)."""
    return 2 * rng.randrange(1, 1 << 63) + 1


def _scan_pairs(algo: str, ns: list[int], cap: int | None):
    fn = _algo_callable(algo, cap)
    oracle = kernel.oracle_is_prime
    return [n for n in ns if fn(n) != oracle(n)]


def random_verify(
    algo: str, count: int, seed: int, jobs: int = 1, cap: int | None = None
) -> list[MismatchRecord]:
    """Compare ``algo`` with the reference oracle on ``count`` seeded random
    odd 64-bit integers. The draw sequence depends only on the seed (Python's
    Mersenne Twister via random.Random), so runs are reproducible."""
    _algo_callable(algo, cap)
    rng = random.Random(seed)
    draws = [random_odd_u64(rng) for _ in range(count)]
    if jobs <= 1:
        bad = _scan_pairs(algo, draws, cap)
    else:
        step = (len(draws) + jobs - 1) // jobs or 1
        parts = [draws[i : i + step] for i in range(0, len(draws), step)]
        bad = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part_bad in pool.map(_scan_pairs, *zip(*[(algo, p, cap) for p in parts])):
                bad.extend(part_bad)
    oracle = kernel.oracle_is_prime
    return [_record(algo, n, oracle(n), not oracle(n), cap) for n in sorted(set(bad))]


# --- sharded counterexample search with checkpointing -----------------------


@dataclass(frozen=True)
class SearchReport:
    mismatches: list[MismatchRecord]
    shards_total: int
    shards_skipped: int
    shards_run: int
    checked: int


def _split_range(start: int, end: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous inclusive sub-ranges covering [start, end] exactly."""
    width = end - start + 1
    parts = min(parts, width) or 1
    base, extra = divmod(width, parts)
    out = []
    lo = start
    for i in range(parts):
        hi = lo + base - 1 + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi + 1
    return out


def _scan_vs_oracle(algo: str, lo: int, hi: int, cap: int | None):
    fn = _algo_callable(algo, cap)
    oracle = kernel.oracle_is_prime
    bad = []
    n = lo if lo % 2 == 1 else lo + 1
    checked = 0
    while n <= hi:
        if fn(n) != oracle(n):
            bad.append(n)
        checked += 1
        n += 2
    return bad, checked


def _load_checkpoint(path: str, shards: list[tuple[int, int]]) -> set[tuple[int, int]]:
    valid = set(shards)
    done: set[tuple[int, int]] = set()
    with open(path, encoding="utf-8") as f:
        for idx, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                entry = json.loads(line)
                key = (int(entry["shard_start"]), int(entry["shard_end"]))
            except (ValueError, KeyError, TypeError) as exc:
                raise CheckpointError(
                    f"{path}:{idx}: unreadable checkpoint line; refusing to "
                    "resume -- restart explicitly (delete the file)"
                ) from exc
            if key not in valid:
                raise CheckpointError(
                    f"{path}:{idx}: shard {key} does not belong to this "
                    "range/shard layout; refusing to resume"
                )
            done.add(key)
    return done


def _append_checkpoint(path: str, lo: int, hi: int) -> None:
    line = json.dumps(
        {
            "shard_start": lo,
            "shard_end": hi,
            "completed_at": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        }
    )
    with open(path, "a", encoding="utf-8") as f:
        f.write(line + "\n")
        f.flush()
        os.fsync(f.fileno())


def search_counterexamples(
    algo: str,
    start: int,
    end: int,
    shard_count: int,
    checkpoint_path: str | None = None,
    jobs: int = 1,
    cap: int | None = None,
    stop_after_shards: int | None = None,
) -> SearchReport:
    """Compare ``algo`` against the reference oracle on every odd n in
    [start, end], in ``shard_count`` shards.

    With a checkpoint path, each completed shard is appended as a JSON line
    (fsynced), and a rerun skips shards already on file -- provided the file
    matches the requested range and shard layout exactly. ``stop_after_shards``
    limits how many pending shards this call runs (used to exercise
    interruption/resume).
    """
    _algo_callable(algo, cap)
    if shard_count < 1:
        raise ValueError("shard_count must be >= 1")
    if not 0 <= start <= end <= U64_MAX:
        raise ValueError("need 0 <= start <= end < 2**64")
    shards = _split_range(start, end, shard_count)
    done: set[tuple[int, int]] = set()
    if checkpoint_path and os.path.exists(checkpoint_path):
        done = _load_checkpoint(checkpoint_path, shards)
    pending = [sh for sh in shards if sh not in done]
    if stop_after_shards is not None:
        pending = pending[:stop_after_shards]

    bad_ns: list[int] = []
    checked = 0
    if jobs <= 1:
        for lo, hi in pending:
            bad, c = _scan_vs_oracle(algo, lo, hi, cap)
            bad_ns.extend(bad)
            checked += c
            if checkpoint_path:
                _append_checkpoint(checkpoint_path, lo, hi)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futs = {
                pool.submit(_scan_vs_oracle, algo, lo, hi, cap): (lo, hi)
                for lo, hi in pending
            }
            for f, (lo, hi) in futs.items():
                bad, c = f.result()
                bad_ns.extend(bad)
                checked += c
                if checkpoint_path:
                    _append_checkpoint(checkpoint_path, lo, hi)

    oracle = kernel.oracle_is_prime
    records = [
        _record(algo, n, oracle(n), not oracle(n), cap) for n in sorted(bad_ns)
    ]
    return SearchReport(
        mismatches=records,
        shards_total=len(shards),
        shards_skipped=len(done),
        shards_run=len(pending),
        checked=checked,
    )


# --- worked-example corpus ---------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    n: int
    factors: tuple[int, ...]  # empty when prime (none here)
    note: str
    expected: dict  # algo key -> is_prime
    stages: dict  # algo key -> pinned stage description


def _expect(mr7=False, first=False):
    # every corpus entry is composite; only the documented false positives
    # report prime on their weak algorithm
    return {
        "oracle": False,
        "ge": False,
        "mrge": False,
        "first": first,
        "mr7": mr7,
        "recipe256": False,
        "recipe2048": False,
    }


CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry(
        341,
        (11, 31),
        "base-2 Fermat pseudoprime; dies at the mod-8 sign check",
        _expect(),
        {"ge": "mod8-euler(base=2)", "mrge": "mr-round(base=2)"},
    ),
    CorpusEntry(
        561,
        (3, 11, 17),
        "Carmichael number; passes the mod-8 check, dies at base isqrt(561)=23",
        _expect(),
        {"ge": "sqrt-base(base=23)"},
    ),
    CorpusEntry(
        1729,
        (7, 13, 19),
        "smallest absolute Euler pseudoprime; base isqrt+1=42 shares factor 7",
        _expect(),
        {"ge": "sqrt-base(base=42)"},
    ),
    CorpusEntry(
        46657,
        (13, 37, 97),
        "absolute Euler pseudoprime that survives the sqrt bases; the 8k+5 "
        "reciprocity check with p=5 kills it",
        _expect(),
        {"ge": "reciprocity(8k+5,p=5)"},
    ),
    CorpusEntry(
        172081,
        (7, 13, 31, 61),
        "Carmichael number caught by sqrt base isqrt(n//2)+1 = 294",
        _expect(),
        {"ge": "sqrt-base(base=294)"},
    ),
    CorpusEntry(
        6164578258027337,
        (64107089, 96160633),
        "semiprime passing the mod-8 check, all four sqrt bases, and the "
        "8k+5/4k+1 single checks; only the 8k+1 check with p=17 rejects it",
        _expect(),
        {"ge": "reciprocity(8k+1,p=17)"},
    ),
    CorpusEntry(
        33077785078626881,
        (105004421, 315013261),
        "documented false positive of the seven-base variant",
        _expect(mr7=True),
        {"ge": "reciprocity(8k+5,p=13)", "mrge": "mr-round(base=181872990)"},
    ),
    CorpusEntry(
        17364052083370132981,
        (548893, 1646677, 19211221),
        "documented false positive of the first-attempt design; larger than "
        "2^63, so it also exercises full-width arithmetic",
        _expect(first=True),
        {"ge": "reciprocity(8k+5,p=53)", "mrge": "mr-round(base=2946527793)"},
    ),
)

_CORPUS_ALGOS = {
    "oracle": reference_oracle64,
    "ge": gauss_euler,
    "mrge": mr_ge,
    "first": mr_ge_first_attempt,
    "mr7": seven_base_variant,
    "recipe256": recipe256,
    "recipe2048": recipe2048,
}


@dataclass(frozen=True)
class EntryReport:
    n: int
    note: str
    ok: bool
    problems: tuple[str, ...]


def corpus_verify() -> list[EntryReport]:
    """Run every algorithm over every corpus entry; check verdicts, pinned
    stages, and that the stored factorizations multiply back to n."""
    reports = []
    for entry in CORPUS:
        problems = []
        if entry.factors:
            prod = math.prod(entry.factors)
            if prod != entry.n:
                problems.append(f"factors multiply to {prod}, not {entry.n}")
        for key, expected_prime in entry.expected.items():
            verdict = _CORPUS_ALGOS[key](entry.n)
            if verdict.is_prime != expected_prime:
                problems.append(
                    f"{key}: expected {'prime' if expected_prime else 'composite'}, "
                    f"got {verdict.label} at {verdict.stage.describe()}"
                )
            pinned = entry.stages.get(key)
            if pinned is not None and verdict.stage.describe() != pinned:
                problems.append(
                    f"{key}: expected stage {pinned}, got {verdict.stage.describe()}"
                )
        reports.append(
            EntryReport(entry.n, entry.note, not problems, tuple(problems))
        )
    return reports


# --- random-base strong-probable-prime oracle (for the wide recipes) --------


def random_base_sprp(n: int, rounds: int = 64, seed: int | None = None) -> bool:
    """Strong-probable-prime test with ``rounds`` uniformly drawn bases in
    [2, n-2]. The acceptance oracle for the wide recipes; not used by any
    production 64-bit path."""
    if n < 2:
        return False
    if n < 4:
        return True  # 2, 3
    if n % 2 == 0:
        return False
    rng = random.Random(seed)
    d = decompose(n)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        if not sprp_round(n, a, d):
            return False
    return True
