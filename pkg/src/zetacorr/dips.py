"""Locate the repulsion dips of the kernel profile and compare depths.

The profile y(t) develops local minima near zero ordinates with depth
close to -2 (m-1)! / (S - 1/2)^m.  Scanning samples y on a uniform grid
(fine enough to resolve the ~2-unit zero spacing), keeps strict local
minima, and refines each by golden-section search; minima are then
matched to the nearest ordinate within a window.

An independent evaluation route for the kernel is also provided: the
truncated pole expansion over dilation index, sharing nothing with the
prime-power series except the integer weights.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

import numpy as np

from .arithmetic import MangoldtTable, MobiusTable, b_coefficient
from .combinatorics import dip_depth_prediction
from .errors import DomainError
from .series import SeriesConfig, kernel_profile_evaluator
from .tuples import CoefficientTuple
from .zeros import ZeroTable

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
MAX_SCAN_STEP = 0.05


@dataclass
class DipRecord:
    """One local minimum of the profile, optionally matched to an ordinate."""

    t_min: float
    y_min: float
    predicted_depth: float
    matched_gamma: Optional[float] = None
    distance: Optional[float] = None

    def to_dict(self) -> dict:
        return asdict(self)


def _golden_minimize(f, lo: float, hi: float, tol: float = 1e-4) -> tuple[float, float]:
    """Golden-section minimum of a unimodal scalar f on [lo, hi]."""
    a, b = lo, hi
    x1 = b - GOLDEN * (b - a)
    x2 = a + GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def scan_minima(
    tup: CoefficientTuple,
    t_lo: float,
    t_hi: float,
    step: float,
    table: MangoldtTable,
    cfg: SeriesConfig,
) -> list[DipRecord]:
    """Strict local minima of the sampled profile, golden-refined in t.

    Every returned record satisfies the grid certificate
    y(t_min - step) >= y_min <= y(t_min + step).

    Raises:
        ValueError: empty range, nonpositive step, or step above 0.05
            (too coarse to resolve dips at the zero spacing).
    """
    if not t_lo <= t_hi:
        raise ValueError("need t_lo <= t_hi")
    if not 0 < step <= MAX_SCAN_STEP:
        raise ValueError(f"step must be in (0, {MAX_SCAN_STEP}]")
    if t_lo == t_hi:
        return []
    profile = kernel_profile_evaluator(tup, table, cfg)
    ts = np.arange(t_lo, t_hi + step / 2.0, step)
    ys = profile(ts)
    predicted = dip_depth_prediction(tup.m, tup.positive_sum)
    scalar = lambda t: float(profile(np.array([t]))[0])
    records = []
    for i in range(1, ts.size - 1):
        if ys[i] < ys[i - 1] and ys[i] < ys[i + 1]:
            t_min, y_min = _golden_minimize(scalar, ts[i - 1], ts[i + 1])
            records.append(
                DipRecord(t_min=t_min, y_min=y_min, predicted_depth=predicted)
            )
    return records


def match_to_zeros(
    records: Iterable[DipRecord], zeros: ZeroTable, window: float = 0.5
) -> list[DipRecord]:
    """Attach the nearest ordinate within `window` to each record.

    Records farther than the window from every ordinate stay unmatched.

    Raises:
        ValueError: negative window.
    """
    if window < 0:
        raise ValueError("window must be >= 0")
    ordinates = zeros.ordinates
    out = []
    for rec in records:
        matched, dist = None, None
        if ordinates.size:
            j = int(np.searchsorted(ordinates, rec.t_min))
            best = None
            for cand in (j - 1, j):
                if 0 <= cand < ordinates.size:
                    d = abs(rec.t_min - float(ordinates[cand]))
                    if best is None or d < best[1]:
                        best = (float(ordinates[cand]), d)
            if best is not None and best[1] < window:
                matched, dist = best
        out.append(
            DipRecord(
                t_min=rec.t_min,
                y_min=rec.y_min,
                predicted_depth=rec.predicted_depth,
                matched_gamma=matched,
                distance=dist,
            )
        )
    return out


def deep_minima(records: Iterable[DipRecord]) -> list[DipRecord]:
    """Records at least half as deep as the predicted dip depth.

    Filters out shallow ripples so counts compare against the ordinate
    count in range.
    """
    return [r for r in records if r.y_min <= 0.5 * r.predicted_depth]


def records_json(records: Iterable[DipRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2)


def kernel_pole_expansion(
    s: complex,
    m: int,
    expansion_order: int,
    zeros: ZeroTable,
    mobius: MobiusTable,
    trivial_cutoff: int = 50,
) -> complex:
    """Kernel value from the truncated pole expansion over dilations.

    Evaluates

        (m-1)! sum_{d <= order} b_m(d)/d^m [ (s - 1/d)^(-m)
            - sum_rho (s - rho/d)^(-m) ]

    with rho running over 1/2 +- i gamma for every tabulated ordinate
    plus the real points -2k, k <= trivial_cutoff.  The free constant of
    the underlying logarithmic-derivative expansion is annihilated by
    the (m-1)-fold differentiation, so none remains for m >= 2.

    Raises:
        DomainError: m < 2 (the free constant would survive) or
            Re(s) < 2.
        ValueError: empty zero table or expansion_order < 2.
    """
    if m < 2:
        raise DomainError("pole expansion needs m >= 2")
    s = complex(s)
    if s.real < 2.0:
        raise DomainError("pole expansion evaluated only for Re(s) >= 2")
    if expansion_order < 2:
        raise ValueError("expansion_order must be >= 2")
    if len(zeros) == 0:
        raise ValueError("pole expansion needs a nonempty zero table")
    gammas = zeros.ordinates
    trivial = -2.0 * np.arange(1, trivial_cutoff + 1, dtype=np.float64)
    prefactor = float(math.factorial(m - 1))
    total = complex(0.0)
    for d in range(1, expansion_order + 1):
        b = b_coefficient(d, m, mobius)
        if b == 0:
            continue
        pole = (s - 1.0 / d) ** (-m)
        zu = s - (0.5 + 1j * gammas) / d
        zl = s - (0.5 - 1j * gammas) / d
        zt = s - trivial / d
        rho_sum = complex(
            math.fsum(np.concatenate([(zu**-m).real, (zl**-m).real, (zt**-m).real]).tolist()),
            math.fsum(np.concatenate([(zu**-m).imag, (zl**-m).imag, (zt**-m).imag]).tolist()),
        )
        # midpoint-rule tail of the trivial-zero sum; the dilation packs
        # those poles toward s, so the fixed cutoff alone is too crude
        rho_sum += (
            (d / 2.0)
            * (s + (2.0 * trivial_cutoff + 1.0) / d) ** (1 - m)
            / (m - 1)
        )
        total += (b / float(d) ** m) * (pole - rho_sum)
    return prefactor * total


def profile_grid(
    tuples: list[CoefficientTuple],
    t_lo: float,
    t_hi: float,
    step: float,
    table: MangoldtTable,
    cfg: SeriesConfig,
) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    """Profile curves y(t) for several tuples on a shared grid.

    Returns the grid and one column per tuple keyed by its display form.

    Raises:
        ValueError: no tuples, bad range, or nonpositive step.
    """
    if not tuples:
        raise ValueError("need at least one tuple")
    if not t_lo <= t_hi:
        raise ValueError("need t_lo <= t_hi")
    if not step > 0:
        raise ValueError("step must be positive")
    ts = np.arange(t_lo, t_hi + step / 2.0, step)
    columns = {}
    for tup in tuples:
        columns[f"y_{tup.compact}"] = kernel_profile_evaluator(tup, table, cfg)(ts)
    return ts, columns


def write_profile_csv(fh, ts: np.ndarray, columns: dict[str, np.ndarray]) -> None:
    """Emit the curve grid as CSV: header row, dot decimals, 17 digits."""
    writer = csv.writer(fh)
    writer.writerow(["t"] + list(columns.keys()))
    for i, t in enumerate(ts):
        writer.writerow(
            [f"{t:.17g}"] + [f"{col[i]:.17g}" for col in columns.values()]
        )
