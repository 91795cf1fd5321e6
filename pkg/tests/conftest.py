import pytest

from primekit.verification import PrimeSieve

_sieves: dict[int, bytes] = {}


@pytest.fixture(scope="session")
def sieve_bytes():
    """Session-cached sieve bitmaps keyed by limit (bytes, 1 per prime)."""

    def get(limit: int) -> bytes:
        bm = _sieves.get(limit)
        if bm is None:
            bm = PrimeSieve(limit).as_bytes()
            _sieves[limit] = bm
        return bm

    return get
