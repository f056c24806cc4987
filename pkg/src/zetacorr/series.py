"""Dirichlet series over prime powers with certified truncation error.

Two families are evaluated for Re s > 1: the m-th power series
sum Lambda(n)^m / n^s (the correlation kernel) and the log-weighted
series sum Lambda(n) (log n)^(m-1) / n^s.  Truncation points are chosen
so a rigorous tail bound falls below the configured tolerance; two
bounds are available and the smaller certificate wins:

* the all-integer majorant  sum_{n>N} (log n)^m n^(-sigma), bounded by
  the closed-form incomplete gamma  Gamma(m+1, (sigma-1) log N) /
  (sigma-1)^(m+1);
* a Chebyshev-weighted bound using the exact partial sum psi(N) from
  the sieve together with psi(x) < 1.03883 x (valid for all x > 0),
  which tracks the prime-power density and is roughly log N / (sigma-1)
  times sharper.

Summation is in ascending n with exact (fsum) accumulation, so equal
inputs give bit-identical results regardless of worker partitioning.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arithmetic import MangoldtTable, MobiusTable, b_coefficient
from .errors import DomainError, ResourceError
from .tuples import CoefficientTuple

CHEBYSHEV_UPPER = 1.03883  # psi(x) < 1.03883 x for all x > 0


@dataclass(frozen=True)
class SeriesConfig:
    """Evaluation parameters: absolute tail tolerance and term cap."""

    tolerance: float = 1e-6
    max_terms: int = 10**8
    sigma_margin: float = 0.5

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_terms < 2:
            raise ValueError("max_terms must be >= 2")
        if self.sigma_margin < 0:
            raise ValueError("sigma_margin must be >= 0")


def upper_gamma_int(k: int, z: float) -> float:
    """Upper incomplete gamma Gamma(k, z) for integer k >= 1, z >= 0.

    Uses the finite closed form (k-1)! e^(-z) sum_{j<k} z^j / j!.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if z < 0:
        raise ValueError("z must be >= 0")
    acc, term = 1.0, 1.0
    for j in range(1, k):
        term *= z / j
        acc += term
    return math.factorial(k - 1) * math.exp(-z) * acc


def integral_tail_bound(n_cut: int, sigma: float, m: int) -> float:
    """All-integer tail bound for sum_{n>N} (log n)^m n^(-sigma).

    Valid (and returned) only when the majorant is decreasing at N,
    i.e. log N >= m / sigma; returns +inf otherwise.
    """
    if sigma <= 1:
        return math.inf
    ln_n = math.log(n_cut)
    if ln_n * sigma < m:
        return math.inf
    z = (sigma - 1.0) * ln_n
    return upper_gamma_int(m + 1, z) / (sigma - 1.0) ** (m + 1)


def psi_tail_bound(n_cut: int, sigma: float, m: int, table: MangoldtTable) -> float:
    """Chebyshev-weighted tail bound for sum_{n>N} Lambda(n) (log n)^(m-1) n^(-sigma).

    Partial summation against psi gives

        (1.03883 N - psi(N)) phi(N) + 1.03883 * Gamma(m, (sigma-1) log N) / (sigma-1)^m

    with phi(x) = (log x)^(m-1) x^(-sigma), valid while phi is
    decreasing (log N >= (m-1)/sigma) and N within the sieve, where
    psi(N) is exact.  Returns +inf outside those conditions.
    """
    if sigma <= 1 or n_cut > table.limit:
        return math.inf
    ln_n = math.log(n_cut)
    if ln_n * sigma < m - 1:
        return math.inf
    phi = ln_n ** (m - 1) * n_cut ** (-sigma)
    boundary = (CHEBYSHEV_UPPER * n_cut - table.psi_at(n_cut)) * phi
    integral = upper_gamma_int(m, (sigma - 1.0) * ln_n) / (sigma - 1.0) ** m
    return boundary + CHEBYSHEV_UPPER * integral


def certified_tail_bound(
    n_cut: int, sigma: float, m: int, table: MangoldtTable
) -> float:
    """The sharper of the two rigorous tail bounds at truncation N.

    Both bound the true tail of either series family, since
    Lambda(n)^m and Lambda(n) (log n)^(m-1) are each at most
    Lambda(n) (log n)^(m-1) <= (log n)^m.
    """
    return min(
        integral_tail_bound(n_cut, sigma, m),
        psi_tail_bound(n_cut, sigma, m, table),
    )


def required_limit_estimate(sigma: float, m: int, tol: float) -> int:
    """Approximate truncation point needed for tolerance tol (message aid)."""
    lo, hi = 1.0, 60.0 / max(sigma - 1.0, 1e-9)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        n = math.exp(mid)
        phi = mid ** (m - 1) * math.exp(-sigma * mid)
        bound = 0.04 * n * phi + CHEBYSHEV_UPPER * upper_gamma_int(
            m, (sigma - 1.0) * mid
        ) / (sigma - 1.0) ** m
        if bound > tol:
            lo = mid
        else:
            hi = mid
    return int(math.exp(hi)) + 1


def choose_truncation(
    sigma: float, m: int, table: MangoldtTable, cfg: SeriesConfig
) -> int:
    """Smallest N with a certified tail bound below cfg.tolerance.

    Raises:
        ResourceError: no admissible N within the sieve limit and term
            cap; the message names the limit that would be needed.
    """
    cap = min(table.limit, cfg.max_terms)
    if certified_tail_bound(cap, sigma, m, table) > cfg.tolerance:
        need = required_limit_estimate(sigma, m, cfg.tolerance)
        raise ResourceError(
            f"tolerance {cfg.tolerance:.3g} at sigma={sigma} needs a sieve/term "
            f"limit of about {need}, but only {cap} is available"
        )
    lo = max(3, int(math.exp(m / sigma)) + 1)
    if certified_tail_bound(lo, sigma, m, table) <= cfg.tolerance:
        return lo
    hi = cap
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if certified_tail_bound(mid, sigma, m, table) <= cfg.tolerance:
            hi = mid
        else:
            lo = mid
    return hi


def prime_tail_estimate(n_cut: int, sigma: float, m: int) -> float:
    """Density estimate (not a bound) of the tail sum_{n>N} Lambda(n)^m n^(-sigma).

    Integrates (log x)^(m-1) x^(-sigma) for the primes plus the square
    prime-power correction; accurate to prime-counting quality, which is
    far below the rigorous bounds at the truncation points in use.
    """
    z = (sigma - 1.0) * math.log(n_cut)
    primes = upper_gamma_int(m, z) / (sigma - 1.0) ** m
    z2 = (2.0 * sigma - 1.0) * 0.5 * math.log(n_cut)
    squares = upper_gamma_int(m, z2) / (2.0 * sigma - 1.0) ** m
    return primes + squares


def _fsum(values: np.ndarray) -> float:
    return math.fsum(values.tolist())


def _truncated_view(table: MangoldtTable, n_cut: int):
    idx = int(np.searchsorted(table.prime_powers, n_cut, side="right"))
    return table.base_log[:idx], table.power_index[:idx]


def _check_domain(s: complex, cfg: SeriesConfig) -> None:
    floor = 1.0 + cfg.sigma_margin
    if s.real < floor:
        raise DomainError(f"Re(s)={s.real} below evaluation floor {floor}")


def _evaluate(weights: np.ndarray, log_n: np.ndarray, s: complex) -> complex:
    amp = weights * np.exp(-s.real * log_n)
    if s.imag == 0.0:
        return complex(_fsum(amp), 0.0)
    phase = s.imag * log_n
    re = _fsum(amp * np.cos(phase))
    im = -_fsum(amp * np.sin(phase))
    return complex(re, im)


def correlation_kernel(
    s: complex, m: int, table: MangoldtTable, cfg: SeriesConfig
) -> complex:
    """Truncated sum of Lambda(n)^m / n^s with certified tail < tolerance.

    Only prime powers contribute; n^(-s) is computed as exp(-s k log p)
    from the exact base prime.  Real s gives imaginary part exactly 0.

    Raises:
        DomainError: Re(s) below 1 + sigma_margin.
        ResourceError: certified truncation not reachable within limits.
    """
    if m < 2:
        raise ValueError("kernel power m must be >= 2")
    s = complex(s)
    _check_domain(s, cfg)
    n_cut = choose_truncation(s.real, m, table, cfg)
    base_log, k = _truncated_view(table, n_cut)
    return _evaluate(base_log**m, k * base_log, s)


def log_derivative_series(
    s: complex, m: int, table: MangoldtTable, cfg: SeriesConfig
) -> complex:
    """Truncated sum of Lambda(n) (log n)^(m-1) / n^s, certified as above.

    For m = 1 this is the logarithmic-derivative series of the zeta
    function (with positive sign); higher m are its derivative family.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    s = complex(s)
    _check_domain(s, cfg)
    n_cut = choose_truncation(s.real, m, table, cfg)
    base_log, k = _truncated_view(table, n_cut)
    weights = (k ** (m - 1)).astype(np.float64) * base_log**m
    return _evaluate(weights, k * base_log, s)


def kernel_profile(
    t: float, tup: CoefficientTuple, table: MangoldtTable, cfg: SeriesConfig
) -> float:
    """Symmetrized kernel section y(t) = 2 Re K(S + it) for the tuple.

    S is the tuple's positive-part sum; by conjugate symmetry of the
    real-coefficient series this equals K(S+it) + K(S-it), and is even
    in t by construction.
    """
    s_plus = tup.positive_sum
    return 2.0 * correlation_kernel(complex(s_plus, t), tup.m, table, cfg).real


def kernel_profile_evaluator(
    tup: CoefficientTuple,
    table: MangoldtTable,
    cfg: SeriesConfig,
    block: int = 256,
):
    """Reusable vectorized y(t) evaluator with terms precomputed once.

    Returns a callable mapping a float64 array of t values to
    2 sum_n w_n cos(t log n) with w_n = Lambda(n)^m n^(-S).  Work is
    blocked over t; each grid point uses numpy's deterministic pairwise
    sum over ascending n.
    """
    m, s_plus = tup.m, tup.positive_sum
    _check_domain(complex(s_plus, 0.0), cfg)
    n_cut = choose_truncation(float(s_plus), m, table, cfg)
    base_log, k = _truncated_view(table, n_cut)
    log_n = k * base_log
    amp = base_log**m * np.exp(-float(s_plus) * log_n)

    def evaluate(ts: np.ndarray) -> np.ndarray:
        ts = np.asarray(ts, dtype=np.float64)
        out = np.empty_like(ts)
        for start in range(0, ts.size, block):
            tb = ts[start : start + block]
            out[start : start + block] = 2.0 * (
                np.cos(tb[:, None] * log_n[None, :]) * amp[None, :]
            ).sum(axis=1)
        return out

    return evaluate


def kernel_profile_grid(
    ts: np.ndarray,
    tup: CoefficientTuple,
    table: MangoldtTable,
    cfg: SeriesConfig,
) -> np.ndarray:
    """Vectorized y(t) over a grid (one truncation choice for all points)."""
    return kernel_profile_evaluator(tup, table, cfg)(ts)


def kernel_expansion_residual(
    s: complex,
    m: int,
    delta_max: int,
    table: MangoldtTable,
    mobius: MobiusTable,
    cfg: SeriesConfig,
) -> float:
    """|K_m(s) - sum_{d <= delta_max} b_m(d) K-expansion term| as a cross-check.

    The kernel expands over the log-weighted series at dilated arguments
    d*s with integer weights b_m(d); the infinite expansion is an exact
    identity, so the residual measures only truncation and roundoff.
    Per-d tolerances shrink geometrically so the weighted error sum
    stays below cfg.tolerance.

    Raises:
        DomainError: Re(s) < 2 (dilated-argument convergence floor).
        ValueError: delta_max < 2 or beyond the Mobius table.
    """
    s = complex(s)
    if s.real < 2.0:
        raise DomainError("expansion cross-check requires Re(s) >= 2")
    if delta_max < 2:
        raise ValueError("delta_max must be >= 2")
    if delta_max > mobius.limit:
        raise ValueError("delta_max exceeds Mobius table limit")
    cfg_k = SeriesConfig(
        tolerance=cfg.tolerance / 2.0,
        max_terms=cfg.max_terms,
        sigma_margin=cfg.sigma_margin,
    )
    kernel = correlation_kernel(s, m, table, cfg_k)
    acc = complex(0.0)
    for delta in range(1, delta_max + 1):
        b = b_coefficient(delta, m, mobius)
        if b == 0:
            continue
        # geometric split keeps sum_d |b_d| tol_d <= tolerance / 2
        tol_d = cfg.tolerance / (4.0 * abs(b) * 2.0 ** (delta - 1))
        cfg_d = SeriesConfig(
            tolerance=tol_d, max_terms=cfg.max_terms, sigma_margin=cfg.sigma_margin
        )
        acc += b * log_derivative_series(delta * s, m, table, cfg_d)
    return abs(kernel - acc)
