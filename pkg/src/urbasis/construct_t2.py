"""Inductive construction of a unique representation basis whose counting
function reaches (sqrt(2)/2 - eps) * sqrt(x) infinitely often.

Rounds alternate two moves. The even step is the same repair as the x^(1/3)
construction (and additionally certifies |m| >= h, which upgrades the
uniqueness window). The odd step translates a dense Sidon set into
[y/2, (1 - eps/2)y), prunes every pair whose difference collides with a
difference of the current set, verifies by direct search that the three
mixed-equation families have no solutions, and adjoins the survivor set.

"Sufficiently large y" is replaced by a constructive search: build, check,
double. Nothing the underlying argument promises is trusted; it is all
re-verified on the finite objects actually built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from urbasis.construct_t1 import RepairAudit, repair_step
from urbasis.errors import (
    BuildInfeasible,
    DensityShortfall,
    InputError,
    InvariantViolation,
)
from urbasis.intset import (
    IntSet,
    counting,
    first_sum_collision,
    max_abs,
    rep_exists,
)
from urbasis.sidon import sidon_in_interval

DEFAULT_MAX_SIDON_PRIME = 10_000


def validate_epsilon(epsilon: Fraction) -> Fraction:
    epsilon = Fraction(epsilon)
    # 0 < eps < sqrt(2)/2, exactly: 2*eps^2 < 1
    if not (epsilon > 0 and 2 * epsilon * epsilon < 1):
        raise InputError(f"epsilon must lie in (0, sqrt(2)/2), got {epsilon}")
    return epsilon


def meets_sqrt_density(count: int, x: int, epsilon: Fraction) -> bool:
    """count >= (sqrt(2)/2 - eps) * sqrt(x), decided in exact arithmetic.

    Squaring once leaves a single sqrt(2)*eps*x cross term; moving it to one
    side and squaring again removes it. All intermediates are Fractions.
    """
    if count < 0 or x < 0:
        raise InputError("count and x must be nonnegative")
    # count^2 >= (1/2 + eps^2) x - sqrt(2) eps x
    lhs = Fraction(count * count) - (Fraction(1, 2) + epsilon * epsilon) * x
    if lhs >= 0:
        return True
    return lhs * lhs <= 2 * epsilon * epsilon * x * x


@dataclass(frozen=True)
class DensifyAudit:
    y: int
    s_size: int
    s_star_size: int
    pruned_pairs: int
    sidon_prime: int


@dataclass(frozen=True)
class StageT2:
    index: int  # 1-based; odd stages carry densify audits, even ones repairs
    set: IntSet
    repair: Optional[RepairAudit] = None
    densify: Optional[DensifyAudit] = None


@dataclass(frozen=True)
class T2Result:
    stages: List[StageT2]
    x_ladder: List[int]
    epsilon: Fraction

    @property
    def final(self) -> StageT2:
        return self.stages[-1]


def repair_step_t2(A: IntSet, round_index: int) -> Tuple[IntSet, RepairAudit]:
    """The cube-root construction's repair, plus the |m| >= h certificate
    this construction relies on for its uniqueness window."""
    D, m, audit = repair_step(A)
    if abs(m) < round_index:
        raise InvariantViolation(
            f"round {round_index}: repaired m={m} has |m| < h, "
            "contradicting the uniqueness window of the previous even stage"
        )
    return D, audit


def _verify_no_mixed_solutions(A: IntSet, S_star: IntSet) -> None:
    """Direct search: the three forbidden equation families must be empty.

    (1) a1 + a2 = s1 + s2, (2) a1 + a2 = a3 + s1, (3) s1 + s2 = s3 + a.
    Each candidate is checked individually against the other side.
    """
    a_elems = A.elements
    a_pair_sums = set()
    for i, a1 in enumerate(a_elems):
        for a2 in a_elems[i:]:
            a_pair_sums.add(a1 + a2)
    for v in a_pair_sums:  # family 1
        if rep_exists(S_star, v):
            raise InvariantViolation(f"family a1+a2 = s1+s2 has a solution at {v}")
    for a in a_elems:  # families 2 and 3 run over all mixed sums a + s
        for s in S_star.elements:
            v = a + s
            if v in a_pair_sums:
                raise InvariantViolation(f"family a1+a2 = a3+s1 has a solution at {v}")
            if rep_exists(S_star, v):
                raise InvariantViolation(f"family s1+s2 = s3+a has a solution at {v}")


def densify_sidon(
    A_even: IntSet,
    epsilon: Fraction,
    y: int,
    *,
    max_sidon_prime: Optional[int] = DEFAULT_MAX_SIDON_PRIME,
) -> Tuple[IntSet, IntSet, DensifyAudit]:
    """One odd step at a fixed y: build, translate, prune, verify, adjoin.

    Raises DensityShortfall when the pruned set misses the
    (sqrt(2)/2 - eps) * sqrt(y) target -- the y-search catches this and
    doubles y. Any failed verification raises InvariantViolation.
    """
    epsilon = validate_epsilon(epsilon)
    if y <= 0 or y % 2 != 0:
        raise InputError(f"y must be a positive even integer, got {y}")
    collision = first_sum_collision(A_even)
    if collision is not None:
        raise InvariantViolation(f"densify_sidon precondition r<=1 fails: {collision}")
    if 0 in A_even:
        raise InvariantViolation("densify_sidon precondition 0 not in A fails")

    half_width = (1 - epsilon) * Fraction(y, 2)
    n_S = int(half_width)  # floor
    if n_S < 2:
        raise DensityShortfall(f"y={y} leaves no room for a Sidon block")
    S = sidon_in_interval(n_S, 0.0, max_prime=max_sidon_prime)

    shift = y // 2
    s_tilde = [s + shift for s in S.set.elements]
    upper = (1 - epsilon / 2) * y
    if not (s_tilde[0] >= shift and Fraction(s_tilde[-1]) < upper):
        raise InvariantViolation("translated block escapes [y/2, (1 - eps/2) y)")
    if first_sum_collision(IntSet._from_sorted(s_tilde)) is not None:
        raise InvariantViolation("translation broke the Sidon property")

    # prune every pair of the block whose difference is a difference of A
    a_abs = abs(max_abs(A_even))
    a_diffs = set()
    for i, a1 in enumerate(A_even.elements):
        for a2 in A_even.elements[i + 1 :]:
            a_diffs.add(a2 - a1)
    window = 2 * a_abs  # A - A lies in [-2|a*|, 2|a*|]
    removed = [False] * len(s_tilde)
    pruned_pairs = 0
    for i, si in enumerate(s_tilde):
        for j in range(i + 1, len(s_tilde)):
            d = s_tilde[j] - si
            if d > window:
                break
            if d in a_diffs:
                removed[i] = removed[j] = True
                pruned_pairs += 1
    if pruned_pairs > 4 * a_abs:
        raise InvariantViolation(
            f"{pruned_pairs} pruned pairs exceed the 4|a*| = {4 * a_abs} bound"
        )
    S_star = IntSet._from_sorted(
        [s for s, dead in zip(s_tilde, removed) if not dead]
    )

    if not meets_sqrt_density(len(S_star), y, epsilon):
        raise DensityShortfall(
            f"y={y}: |S*|={len(S_star)} < (sqrt(2)/2 - {epsilon}) sqrt(y)"
        )

    _verify_no_mixed_solutions(A_even, S_star)
    A_odd = A_even.union(S_star)
    collision = first_sum_collision(A_odd)
    if collision is not None:
        raise InvariantViolation(f"union broke uniqueness: {collision}")
    return A_odd, S_star, DensifyAudit(
        y=y,
        s_size=len(S.set),
        s_star_size=len(S_star),
        pruned_pairs=pruned_pairs,
        sidon_prime=S.param,
    )


def _y_search_start(epsilon: Fraction, a_abs: int, x_prev: int) -> int:
    """Smallest admissible even y: y > x_prev, y > 6|a*| (kills the
    a1+a2 = a3+s1 family) and y > 2|a*|/eps (kills s1+s2 = s3+a, since then
    eps*y/2 > |a*|)."""
    base = max(x_prev, 6 * a_abs, int(Fraction(2 * a_abs) / epsilon))
    y = base + 1
    return y if y % 2 == 0 else y + 1


def choose_y(
    A_even: IntSet,
    epsilon: Fraction,
    x_prev: int,
    *,
    max_sidon_prime: Optional[int] = DEFAULT_MAX_SIDON_PRIME,
    max_attempts: int = 200,
) -> Tuple[int, IntSet, IntSet, DensifyAudit]:
    """Fused doubling search for the smallest accepted y.

    Builds the Sidon block at each candidate y (acceptance depends on the
    actual pruned cardinality, so there is no cheaper test), doubling on
    every DensityShortfall. Returns (y, A_odd, S_star, audit).
    """
    epsilon = validate_epsilon(epsilon)
    y = _y_search_start(epsilon, abs(max_abs(A_even)), x_prev)
    for _ in range(max_attempts):
        try:
            A_odd, S_star, audit = densify_sidon(
                A_even, epsilon, y, max_sidon_prime=max_sidon_prime
            )
            return y, A_odd, S_star, audit
        except DensityShortfall:
            y *= 2
    raise BuildInfeasible(f"no admissible y within {max_attempts} doublings")


def verify_stage_t2(stage: StageT2, x_ladder: List[int], epsilon: Fraction) -> None:
    """Re-check properties I-IV for one stage of the alternation."""
    A, idx = stage.set, stage.index
    collision = first_sum_collision(A)  # property I
    if collision is not None:
        raise InvariantViolation(f"stage {idx}: r<=1 fails: {collision}")
    if idx % 2 == 0:  # property II at even stages: r(n) = 1 for |n| <= h
        h = idx // 2
        for n in range(-h, h + 1):
            if not rep_exists(A, n):
                raise InvariantViolation(f"stage {idx}: r({n}) = 0 but |n| <= {h}")
    else:  # property III at odd stages
        h = (idx + 1) // 2
        x_h = x_ladder[h - 1]
        if not meets_sqrt_density(counting(A, -x_h, x_h), x_h, epsilon):
            raise InvariantViolation(
                f"stage {idx}: count(-{x_h}, {x_h}) misses (sqrt2/2 - eps) sqrt(x)"
            )
    if 0 in A:  # property IV
        raise InvariantViolation(f"stage {idx}: contains 0")


def build_t2(
    rounds: int,
    epsilon: Fraction,
    *,
    max_sidon_prime: Optional[int] = DEFAULT_MAX_SIDON_PRIME,
) -> T2Result:
    """Run the alternation from A_1 = {-1, 1}, x_1 = 1 for `rounds` rounds.

    Each round is one repair followed by one fused y-search + Sidon
    densification, producing stages A_{2h} and A_{2h+1} and ladder point
    x_{h+1}. Every stage is re-verified against properties I-IV.

    The y the search must reach grows roughly like the square of the
    previous round's y (the pruning loss scales with |A|^2, which scales
    with y_prev), so desk-scale runs beyond the first round quickly exceed
    any Sidon-prime cap; BuildInfeasible then reports the prime that would
    be required.
    """
    if rounds < 1:
        raise InputError(f"rounds must be >= 1, got {rounds}")
    epsilon = validate_epsilon(epsilon)
    stages = [StageT2(index=1, set=IntSet((-1, 1)))]
    x_ladder = [1]
    verify_stage_t2(stages[0], x_ladder, epsilon)
    for h in range(1, rounds + 1):
        current = stages[-1]
        D, repair_audit = repair_step_t2(current.set, h)
        even = StageT2(index=2 * h, set=D, repair=repair_audit)
        verify_stage_t2(even, x_ladder, epsilon)
        stages.append(even)
        try:
            y, A_odd, _, densify_audit = choose_y(
                D, epsilon, x_ladder[-1], max_sidon_prime=max_sidon_prime
            )
        except BuildInfeasible as exc:
            raise BuildInfeasible(
                f"round {h}: {exc}", required_prime=exc.required_prime
            ) from exc
        x_ladder.append(y)
        odd = StageT2(index=2 * h + 1, set=A_odd, densify=densify_audit)
        verify_stage_t2(odd, x_ladder, epsilon)
        if not current.set.issubset(A_odd):
            raise InvariantViolation(f"round {h}: nesting broken")
        stages.append(odd)
    # the final set dominates every earlier stage, so the whole ladder must
    # still pass on it
    final = stages[-1].set
    for h, x_h in enumerate(x_ladder, start=1):
        if not meets_sqrt_density(counting(final, -x_h, x_h), x_h, epsilon):
            raise InvariantViolation(f"final set misses the bound at x_{h} = {x_h}")
    return T2Result(stages=stages, x_ladder=x_ladder, epsilon=epsilon)
