"""Integer-arithmetic substrate: prime-power and Mobius sieves.

The von Mangoldt table stores, for every n up to a limit, the base prime
p when n = p^k and zero otherwise.  Lambda(n) = log(p) is therefore
always recomputed from the exact integer p, never stored rounded, and
Lambda(n)^m = (log p)^m costs one pow per use at full double precision.

Tables are immutable after construction and safe for concurrent reads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

SIEVE_LIMIT_CAP = 10**8


def _prime_sieve(limit: int) -> np.ndarray:
    """Boolean Eratosthenes sieve; index n is True iff n is prime."""
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return is_prime


@dataclass(frozen=True)
class MangoldtTable:
    """Prime-power table: base_prime[n] = p if n = p^k (k >= 1), else 0.

    ``prime_powers``, ``base_log`` and ``power_index`` are the compressed
    ascending view used by series evaluation: entry j is the j-th prime
    power n_j with its log(p) and exponent k.  ``psi`` is the cumulative
    Chebyshev sum over that view: psi[j] = sum of log(p) for the first
    j+1 prime powers.
    """

    limit: int
    base_prime: np.ndarray
    prime_powers: np.ndarray = field(repr=False)
    base_log: np.ndarray = field(repr=False)
    power_index: np.ndarray = field(repr=False)
    psi: np.ndarray = field(repr=False)

    def lambda_value(self, n: int) -> float:
        """Lambda(n): log of the base prime when n is a prime power, else 0."""
        if not 1 <= n <= self.limit:
            raise ValueError(f"n={n} outside table range [1, {self.limit}]")
        p = int(self.base_prime[n])
        return math.log(p) if p else 0.0

    def psi_at(self, x: float) -> float:
        """Chebyshev psi(x) = sum of Lambda(n) for n <= x, exact from the table."""
        if x > self.limit:
            raise ValueError(f"x={x} beyond sieve limit {self.limit}")
        j = int(np.searchsorted(self.prime_powers, x, side="right"))
        return float(self.psi[j - 1]) if j else 0.0


@dataclass(frozen=True)
class MobiusTable:
    """Mobius function values mu(n) in {-1, 0, +1} for n <= limit."""

    limit: int
    values: np.ndarray

    def mu(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n={n} outside table range [1, {self.limit}]")
        return int(self.values[n])


def sieve_mangoldt(limit: int) -> MangoldtTable:
    """Sieve the von Mangoldt base-prime table for all n <= limit.

    Raises:
        ValueError: limit < 1 or above the configured cap.
    """
    if limit < 1:
        raise ValueError("sieve limit must be >= 1")
    if limit > SIEVE_LIMIT_CAP:
        raise ValueError(f"sieve limit {limit} exceeds cap {SIEVE_LIMIT_CAP}")
    base = np.zeros(limit + 1, dtype=np.int32)
    if limit >= 2:
        primes = np.nonzero(_prime_sieve(limit))[0].astype(np.int64)
        pk = primes.copy()
        while pk.size:
            base[pk] = primes[: pk.size].astype(np.int32)
            # next power; the mask is a prefix because pk grows while
            # limit // p shrinks along the ascending prime list
            keep = pk <= limit // primes[: pk.size]
            pk = pk[keep] * primes[: pk.size][keep]
    pp = np.nonzero(base)[0].astype(np.int64)
    base_log = np.log(base[pp].astype(np.float64))
    # exponent k of n = p^k, recovered by rounding log n / log p
    power_index = np.rint(np.log(pp.astype(np.float64)) / base_log).astype(np.int64)
    psi = np.cumsum(base_log)
    return MangoldtTable(
        limit=limit,
        base_prime=base,
        prime_powers=pp,
        base_log=base_log,
        power_index=power_index,
        psi=psi,
    )


def sieve_mobius(limit: int) -> MobiusTable:
    """Sieve mu(n) for all n <= limit.

    Raises:
        ValueError: limit < 1 or above the configured cap.
    """
    if limit < 1:
        raise ValueError("sieve limit must be >= 1")
    if limit > SIEVE_LIMIT_CAP:
        raise ValueError(f"sieve limit {limit} exceeds cap {SIEVE_LIMIT_CAP}")
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    if limit >= 2:
        primes = np.nonzero(_prime_sieve(limit))[0]
        for p in primes:
            mu[p::p] = -mu[p::p]
            sq = int(p) * int(p)
            if sq <= limit:
                mu[sq::sq] = 0
    return MobiusTable(limit=limit, values=mu)


def divisors(k: int) -> list[int]:
    """All positive divisors of k, ascending."""
    if k < 1:
        raise ValueError("k must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= k:
        if k % d == 0:
            small.append(d)
            if d != k // d:
                large.append(k // d)
        d += 1
    return small + large[::-1]


def b_coefficient(k: int, m: int, mobius: MobiusTable) -> int:
    """Exact integer sum of mu(d) * d^(m-1) over the divisors d of k.

    These are the Dirichlet-inverse coefficients of n^(m-1): convolving
    them back against d^(m-1) gives the constant 1 (see tests).

    Raises:
        ValueError: k outside the Mobius table.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if not 1 <= k <= mobius.limit:
        raise ValueError(f"k={k} out of range for Mobius table (limit {mobius.limit})")
    total = 0
    for d in divisors(k):
        mu = int(mobius.values[d])
        if mu:
            total += mu * d ** (m - 1)
    return total


def nearest_int(x: float) -> int:
    """Nearest integer, with exact halves rounding up (also for x < 0).

    nearest_int(2.5) = 3 and nearest_int(-2.5) = -2.

    Raises:
        ValueError: x is NaN or infinite.
    """
    if not math.isfinite(x):
        raise ValueError("nearest_int requires a finite argument")
    if abs(x) >= 2.0**52:
        return int(x)  # every such float is already an integer
    f = math.floor(x)
    # x - f is exact: both operands share an exponent window below 2**52
    return f + 1 if x - f >= 0.5 else f
