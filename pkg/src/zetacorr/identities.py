"""Randomized verification suite for the exact cancellation identities.

Runs the two alternating-sum evaluators over random complex inputs for
all orders up to 6, the cosh product-to-sum expansion over random real
inputs, and the exact integer convolution check for the Dirichlet
inverse coefficients.  Residual thresholds are scale-relative where the
identities cancel catastrophically by design.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arithmetic import sieve_mobius
from .combinatorics import (
    alternating_multinomial_sum_scaled,
    cosh_product_identity,
    signed_power_sum_scaled,
)

SCALED_RESIDUAL_TOL = 1e-9
COSH_RELATIVE_TOL = 1e-12
B_INVERSE_LIMIT = 10**4
B_INVERSE_MAX_POWER = 6


@dataclass
class IdentitySuiteResult:
    seed: int
    iterations: int
    max_scaled_residual_multinomial: float = 0.0
    max_scaled_residual_power: float = 0.0
    max_relative_gap_cosh: float = 0.0
    b_inverse_checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _random_complex(rng: random.Random) -> complex:
    return complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))


def b_inverse_convolution(limit: int, m: int) -> list[int]:
    """sum_{d e = k} d^(m-1) b_m(e) for every k <= limit, exactly.

    The expected value is 1 for all k; computed by two sieve-style
    convolution passes in Python integers.
    """
    mobius = sieve_mobius(limit)
    b = [0] * (limit + 1)
    for d in range(1, limit + 1):
        mu = int(mobius.values[d])
        if mu == 0:
            continue
        contrib = mu * d ** (m - 1)
        for k in range(d, limit + 1, d):
            b[k] += contrib
    acc = [0] * (limit + 1)
    for d in range(1, limit + 1):
        weight = d ** (m - 1)
        for k in range(d, limit + 1, d):
            acc[k] += weight * b[k // d]
    return acc[1:]


def run_identity_suite(
    seed: int = 0,
    iterations: int = 100,
    max_order: int = 6,
    b_limit: int = B_INVERSE_LIMIT,
) -> IdentitySuiteResult:
    """Execute the full randomized suite; collect max residuals and violations."""
    rng = random.Random(seed)
    result = IdentitySuiteResult(seed=seed, iterations=iterations)
    for q in range(2, max_order + 1):
        for r in range(1, q):
            for _ in range(iterations):
                xs = [_random_complex(rng) for _ in range(q)]
                residual, scale = alternating_multinomial_sum_scaled(xs, r)
                scaled = abs(residual) / max(scale, 1.0)
                result.max_scaled_residual_multinomial = max(
                    result.max_scaled_residual_multinomial, scaled
                )
                if scaled > SCALED_RESIDUAL_TOL:
                    result.violations.append(
                        f"multinomial q={q} r={r}: scaled residual {scaled:.3e}"
                    )
                alphas = [_random_complex(rng) for _ in range(q)]
                residual, scale = signed_power_sum_scaled(alphas, r)
                scaled = abs(residual) / max(scale, 1.0)
                result.max_scaled_residual_power = max(
                    result.max_scaled_residual_power, scaled
                )
                if scaled > SCALED_RESIDUAL_TOL:
                    result.violations.append(
                        f"signed-power q={q} r={r}: scaled residual {scaled:.3e}"
                    )
    for s in range(2, max_order + 1):
        for _ in range(iterations):
            a_vals = [rng.uniform(-3.0, 3.0) for _ in range(s)]
            lhs, rhs = cosh_product_identity(a_vals)
            rel = abs(lhs - rhs) / abs(lhs)
            result.max_relative_gap_cosh = max(result.max_relative_gap_cosh, rel)
            if rel > COSH_RELATIVE_TOL:
                result.violations.append(f"cosh s={s}: relative gap {rel:.3e}")
    for m in range(2, B_INVERSE_MAX_POWER + 1):
        conv = b_inverse_convolution(b_limit, m)
        bad = [k + 1 for k, v in enumerate(conv) if v != 1]
        result.b_inverse_checked += len(conv)
        if bad:
            result.violations.append(
                f"inverse convolution m={m}: first failure at k={bad[0]}"
            )
    return result
