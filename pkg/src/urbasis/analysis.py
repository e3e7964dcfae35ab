"""Empirical growth checks for unique-representation prefixes.

Block profiles split [1, n^2] (and its mirror) into n blocks of width n and
count elements per block; for a genuine unique-representation set the five
block inequalities hold exactly, so they double as an independent witness
that r <= 1 really holds. The liminf probe evaluates the block-counting
quotient min_l count(-l n, l n) / sqrt(l n / log(l n)) -- a finite-prefix
surrogate for a statement about the infinite basis, and labeled as such.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from urbasis.errors import InputError
from urbasis.intset import IntSet, counting

FOUR_SQRT_SEVEN = 4 * math.sqrt(7)  # comparison constant for the liminf probe


@dataclass(frozen=True)
class BlockProfile:
    """Counts per block: N[l-1] = |A ^ ((l-1)n, ln]|, M[l-1] = |A ^ [-ln, (-l+1)n)|."""

    n: int
    N: Tuple[int, ...]
    M: Tuple[int, ...]


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: int
    bound: int
    ok: bool


@dataclass(frozen=True)
class BlockReport:
    n: int
    checks: Tuple[InequalityCheck, ...]
    cauchy_chain_ok: bool  # numeric consistency: (sum (N+M)/sqrt(l))^2 <= (sum 1/l) * sum (N+M)^2

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)


@dataclass(frozen=True)
class GrowthSampleRow:
    x: int
    count: int
    per_cbrt: float  # count / x^(1/3)
    per_sqrt: float  # count / sqrt(x)
    slack: float  # sqrt(8x) - count; >= 0 for a verified unique prefix


@dataclass(frozen=True)
class GrowthReport:
    samples: Tuple[GrowthSampleRow, ...]
    cA_estimate: float  # max count/sqrt(x) over the grid (finite-prefix surrogate)
    liminf_probe: Optional[float] = None


def block_counts(A: IntSet, n: int) -> BlockProfile:
    """Exact block counts with the right-closed positive / left-closed
    negative bracketing; 0 belongs to no block."""
    if n < 1:
        raise InputError(f"block size must be >= 1, got {n}")
    if 0 in A:
        warnings.warn("set contains 0, which belongs to no block", stacklevel=2)
    if len(A) and max(abs(A.min()), abs(A.max())) < n * n:
        warnings.warn(
            f"set does not reach +-n^2 = {n * n}; trailing blocks undercount",
            stacklevel=2,
        )
    N = tuple(counting(A, (l - 1) * n + 1, l * n) for l in range(1, n + 1))
    M = tuple(counting(A, -l * n, (-l + 1) * n - 1) for l in range(1, n + 1))
    return BlockProfile(n=n, N=N, M=M)


def check_block_inequalities(profile: BlockProfile) -> BlockReport:
    """Evaluate the five exact block inequalities; failures are report data
    (and, for a verified unique prefix, convict the upstream constructor)."""
    n, N, M = profile.n, profile.N, profile.M
    sum_binom = sum(v * (v - 1) // 2 for v in N)
    sum_n2 = sum(v * v for v in N)
    sum_m2 = sum(v * v for v in M)
    max_prod = max((a * b for a, b in zip(N, M)), default=0)
    sum_mixed = sum((a + b) ** 2 for a, b in zip(N, M))
    checks = (
        InequalityCheck("sum_binom_N_lt_n", sum_binom, n, sum_binom < n),
        InequalityCheck("sum_N_sq_lt_5n", sum_n2, 5 * n, sum_n2 < 5 * n),
        InequalityCheck("sum_M_sq_lt_5n", sum_m2, 5 * n, sum_m2 < 5 * n),
        InequalityCheck("max_NM_lt_2n", max_prod, 2 * n, max_prod < 2 * n),
        InequalityCheck("sum_NM_sq_lt_14n", sum_mixed, 14 * n, sum_mixed < 14 * n),
    )
    weighted = sum((a + b) / math.sqrt(l) for l, (a, b) in enumerate(zip(N, M), 1))
    harmonic = sum(1 / l for l in range(1, n + 1))
    cauchy_ok = weighted**2 <= harmonic * sum_mixed * (1 + 1e-12) + 1e-9
    return BlockReport(n=n, checks=checks, cauchy_chain_ok=cauchy_ok)


def liminf_probe(A: IntSet, n: int) -> float:
    """min over 1 <= l <= n of count(-ln, ln) / sqrt(ln / log(ln)).

    Finite-prefix surrogate for the liminf quotient; compare against
    4*sqrt(7) + delta with a user-chosen delta.
    """
    if n < 2:
        raise InputError(f"probe needs n >= 2, got {n}")
    if len(A) and max(abs(A.min()), abs(A.max())) < n * n:
        warnings.warn(f"set does not reach +-n^2 = {n * n}", stacklevel=2)
    return min(
        counting(A, -l * n, l * n) / math.sqrt(l * n / math.log(l * n))
        for l in range(1, n + 1)
    )


def nathanson_ok(A: IntSet) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Exact check of count(-x, x) <= sqrt(8x) for every real x >= 1.

    count(-x, x) only jumps where x passes an element magnitude and the
    bound grows between jumps, so checking x = 1 and each magnitude >= 1 is
    equivalent to checking all x (integer comparison count^2 <= 8x).
    Returns (ok, first violation (x, count)).
    """
    magnitudes = sorted({abs(e) for e in A.elements if abs(e) >= 1})
    for x in sorted({1, *magnitudes}):
        c = counting(A, -x, x)
        if c * c > 8 * x:
            return False, (x, c)
    return True, None


def growth_report(
    A: IntSet, grid: Sequence[int], *, probe_n: Optional[int] = None
) -> GrowthReport:
    """Per-sample growth ratios and the sqrt(8x) slack over a grid of x values."""
    if not grid:
        raise InputError("grid must be nonempty")
    if any(x < 1 for x in grid):
        raise InputError("grid values must be >= 1")
    if len(A) and max(grid) > max(abs(A.min()), abs(A.max())):
        warnings.warn(
            "grid extends beyond max|A|; counts there undercount the basis",
            stacklevel=2,
        )
    samples = []
    for x in sorted(set(grid)):
        c = counting(A, -x, x)
        samples.append(
            GrowthSampleRow(
                x=x,
                count=c,
                per_cbrt=c / x ** (1 / 3),
                per_sqrt=c / math.sqrt(x),
                slack=math.sqrt(8 * x) - c,
            )
        )
    probe = liminf_probe(A, probe_n) if probe_n is not None else None
    return GrowthReport(
        samples=tuple(samples),
        cA_estimate=max(s.per_sqrt for s in samples),
        liminf_probe=probe,
    )
