"""Integer coefficient tuples for correlation sums.

A valid tuple has length >= 3, only nonzero entries, zero sum, and any
two distinct values coprime.  Derived quantities: the positive-part sum
(the height at which the series kernel is evaluated) and the sum of
absolute values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CoefficientTuple:
    """Validated correlation-sum coefficients.

    Build through :func:`coefficient_tuple`, which raises ValueError
    naming the violated invariant.
    """

    entries: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def positive_sum(self) -> int:
        """Sum of the positive entries; the kernel evaluation height."""
        return sum(a for a in self.entries if a > 0)

    @property
    def abs_sum(self) -> int:
        return sum(abs(a) for a in self.entries)

    @property
    def is_balanced(self) -> bool:
        """True when the tuple is all +-1 (equal counts, by zero sum)."""
        return all(abs(a) == 1 for a in self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.entries) + ")"

    @property
    def compact(self) -> str:
        """Comma-free display form, e.g. '+1+1-2' (safe in CSV headers)."""
        return "".join(("+" if a > 0 else "") + str(a) for a in self.entries)


def coefficient_tuple(entries) -> CoefficientTuple:
    """Validate and freeze a coefficient tuple.

    Raises:
        ValueError: with the violated invariant named, if the length is
            below 3, an entry is zero, the sum is nonzero, or two
            distinct values share a factor.
    """
    tup = tuple(int(a) for a in entries)
    if len(tup) < 3:
        raise ValueError(f"tuple length must be >= 3, got {len(tup)}")
    if any(a == 0 for a in tup):
        raise ValueError("tuple entries must be nonzero")
    if sum(tup) != 0:
        raise ValueError(f"tuple entries must sum to 0, got {sum(tup)}")
    distinct = sorted(set(tup))
    for i, a in enumerate(distinct):
        for b in distinct[i + 1 :]:
            if math.gcd(abs(a), abs(b)) != 1:
                raise ValueError(
                    f"distinct tuple values {a} and {b} must be coprime"
                )
    return CoefficientTuple(entries=tup)
