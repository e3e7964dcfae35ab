"""Inductive construction of a unique representation basis with
counting-function growth at least x^(1/3)/8 on its whole range.

Each stage applies a repair step -- adjoin {-b, b+m} and, when -m is still
unrepresented, {-b_tilde, b_tilde - m} -- to give the previously
unrepresented integer m of minimum |m| exactly one representation, then
greedily densifies against the forbidden set

    W = {d1 + d2 - d3} union {(d4 + d5)/2 : d4 + d5 even}

until the stage holds at least |d*|^(1/3)/2 elements. Every property the
underlying argument guarantees is re-verified at runtime; a violation
raises InvariantViolation (an implementation bug, never bad data).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from urbasis.errors import InputError, InvariantViolation
from urbasis.intset import (
    IntSet,
    counting,
    first_sum_collision,
    max_abs,
    min_unrepresented,
    rep_count,
    rep_exists,
)

START_SET = (-1, 1)


@dataclass(frozen=True)
class RepairAudit:
    m: int
    b: int
    b_tilde: Optional[int]


@dataclass(frozen=True)
class StageAudit:
    repair: RepairAudit
    greedy_additions: Tuple[int, ...]

    @property
    def g(self) -> int:
        return len(self.greedy_additions)


@dataclass(frozen=True)
class StageT1:
    h: int
    set: IntSet
    a_star: int
    audit: Optional[StageAudit]  # None only for the seed stage h=1


@dataclass(frozen=True)
class GrowthSample:
    x: int
    count: int
    ok: bool  # 512 * count^3 >= x, i.e. count >= x^(1/3)/8


@dataclass(frozen=True)
class T1Result:
    stages: List[StageT1]
    samples: List[GrowthSample]
    x0: Optional[int]  # least sampled x beyond which the x^(1/3)/8 bound holds

    @property
    def final(self) -> StageT1:
        return self.stages[-1]


def meets_density_threshold(cardinality: int, d_star_abs: int) -> bool:
    """cardinality >= |d*|^(1/3) / 2, evaluated as 8*card^3 >= |d*| (exact)."""
    return 8 * cardinality**3 >= d_star_abs


def repair_step(A: IntSet) -> Tuple[IntSet, int, RepairAudit]:
    """Make the minimum-|m| unrepresented integer (and -m) representable once.

    Returns (D, m, audit). Verified before return: r_D <= 1 everywhere,
    r_D(m) = r_D(-m) = 1, 0 not in D, and |a*| < max|D| <= 64*|a*|.
    """
    if not len(A):
        raise InputError("repair_step requires a nonempty set")
    a_abs = abs(max_abs(A))
    m = min_unrepresented(A)
    b = 4 * a_abs + abs(m)
    D = A.union([-b, b + m])
    b_tilde = None
    if rep_count(D, -m).count != 1:
        b_tilde = 4 * b + 5 * abs(m)
        D = D.union([-b_tilde, b_tilde - m])

    collision = first_sum_collision(D)
    if collision is not None:
        raise InvariantViolation(f"repair broke uniqueness: {collision}")
    if rep_count(D, m).count != 1 or rep_count(D, -m).count != 1:
        raise InvariantViolation(f"repair failed to represent +-{m} exactly once")
    if 0 in D:
        raise InvariantViolation("repair introduced 0")
    d_abs = abs(max_abs(D))
    if not (a_abs < d_abs <= 64 * a_abs):
        raise InvariantViolation(
            f"repair growth out of window: |a*|={a_abs}, |d*|={d_abs}"
        )
    return D, m, RepairAudit(m=m, b=b, b_tilde=b_tilde)


def forbidden_set(D: IntSet) -> IntSet:
    """Full materialization of W (test oracle; densify tests membership
    against the pair-sum table instead of building this)."""
    elems = D.elements
    sums = set()
    for i, d1 in enumerate(elems):
        for d2 in elems[i:]:
            sums.add(d1 + d2)
    W = set()
    for s in sums:
        for d3 in elems:
            W.add(s - d3)
        if s % 2 == 0:
            W.add(s // 2)
    bound = len(elems) ** 3 + len(elems) ** 2
    if len(W) > bound:
        raise InvariantViolation(f"|W| = {len(W)} exceeds |D|^3 + |D|^2 = {bound}")
    return IntSet(W)


def _candidate_stream():
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def densify(D: IntSet) -> Tuple[IntSet, Tuple[int, ...]]:
    """Greedy densification: repeatedly adjoin the nonzero integer of minimum
    absolute value (positive on ties, |n| <= |d*|/2) outside the current
    forbidden set, until 8*card^3 >= |d*|.

    Membership in W is tested as: 2n in D+D, or n+d in D+D for some d. After
    every addition the r <= 1 claim is re-asserted on all new sums.
    """
    collision = first_sum_collision(D)
    if collision is not None:
        raise InvariantViolation(f"densify precondition r<=1 fails: {collision}")
    if 0 in D:
        raise InvariantViolation("densify precondition 0 not in D fails")

    d_star_abs = abs(max_abs(D))
    cap = d_star_abs // 2
    elems = list(D.elements)
    pair_sums = set()
    for i, d1 in enumerate(elems):
        for d2 in elems[i:]:
            pair_sums.add(d1 + d2)

    additions: List[int] = []
    stream = _candidate_stream()
    while not meets_density_threshold(len(elems), d_star_abs):
        chosen = None
        for n in stream:
            if abs(n) > cap:
                raise InvariantViolation(
                    "no densification candidate within |n| <= |d*|/2 "
                    "(contradicts the forbidden-set counting bound)"
                )
            if 2 * n in pair_sums:
                continue
            if any((n + d) in pair_sums for d in elems):
                continue
            chosen = n
            break
        # r <= 1 must survive: every sum the new element creates is fresh
        new_sums = [chosen + d for d in elems] + [2 * chosen]
        for s in new_sums:
            if s in pair_sums:
                raise InvariantViolation(
                    f"greedy addition {chosen} collides at sum {s}"
                )
        pair_sums.update(new_sums)
        elems.append(chosen)
        additions.append(chosen)

    return IntSet(elems), tuple(additions)


def verify_stage(stage: StageT1, prev: Optional[StageT1]) -> None:
    """Exhaustively re-check the five inductive stage properties."""
    A, h = stage.set, stage.h
    collision = first_sum_collision(A)  # property I over the full representable range
    if collision is not None:
        raise InvariantViolation(f"stage {h}: r<=1 fails: {collision}")
    for n in range(-(h - 1), h):  # property II
        if not rep_exists(A, n):
            raise InvariantViolation(f"stage {h}: r({n}) = 0 but |n| <= h-1")
    a_abs = abs(stage.a_star)
    if prev is not None:  # property III
        p_abs = abs(prev.a_star)
        if not (p_abs < a_abs <= 64 * p_abs):
            raise InvariantViolation(
                f"stage {h}: growth window violated: {p_abs} -> {a_abs}"
            )
        if not prev.set.issubset(A):
            raise InvariantViolation(f"stage {h}: not a superset of stage {prev.h}")
    if not meets_density_threshold(counting(A, -a_abs, a_abs), a_abs):  # property IV
        raise InvariantViolation(f"stage {h}: density threshold unmet")
    if 0 in A:  # property V
        raise InvariantViolation(f"stage {h}: contains 0")


def log_grid(lo: int, hi: int, points: int) -> List[int]:
    """Deduplicated integer log grid from lo to hi inclusive."""
    if lo < 1 or hi < lo or points < 2:
        raise InputError("log_grid needs 1 <= lo <= hi and points >= 2")
    grid = set()
    span = hi / lo
    for i in range(points):
        x = round(lo * span ** (i / (points - 1)))
        grid.add(min(max(x, lo), hi))
    return sorted(grid)


def growth_samples(A: IntSet, lo: int, hi: int, points: int) -> List[GrowthSample]:
    samples = []
    for x in log_grid(lo, hi, points):
        c = counting(A, -x, x)
        samples.append(GrowthSample(x=x, count=c, ok=512 * c**3 >= x))
    return samples


def _advance(history: List[StageT1]) -> None:
    """Extend the induction by one stage, verifying everything."""
    current = history[-1]
    h = current.h
    D, m, repair_audit = repair_step(current.set)
    if not (h <= abs(m) <= 2 * abs(current.a_star) + 1):
        raise InvariantViolation(f"stage {h}: |m|={abs(m)} escapes [h, 2|a*|+1]")
    A_next, additions = densify(D)
    stage = StageT1(
        h=h + 1,
        set=A_next,
        a_star=max_abs(A_next),
        audit=StageAudit(repair=repair_audit, greedy_additions=additions),
    )
    verify_stage(stage, current)
    history.append(stage)


def _finish(history: List[StageT1], grid_points: int) -> T1Result:
    final = history[-1]
    samples = growth_samples(final.set, 1, abs(final.a_star), grid_points)
    x0 = None
    for s in reversed(samples):
        if not s.ok:
            break
        x0 = s.x
    return T1Result(stages=history, samples=samples, x0=x0)


def _seed() -> List[StageT1]:
    history = [StageT1(h=1, set=IntSet(START_SET), a_star=1, audit=None)]
    verify_stage(history[0], None)
    return history


def build_t1(stages: int, *, grid_points: int = 200) -> T1Result:
    """Run the induction from A_1 = {-1, 1} for `stages` stages.

    Every stage is verified against properties I-V; the result also reports
    the least sampled x0 beyond which count(-x, x) >= x^(1/3)/8 holds on a
    log grid over [1, |a*|] (the "sufficiently large" threshold of the
    asymptotic statement, made concrete for this prefix).
    """
    if stages < 1:
        raise InputError(f"stages must be >= 1, got {stages}")
    history = _seed()
    while history[-1].h < stages:
        _advance(history)
    return _finish(history, grid_points)


def build_t1_until(min_a_star: int, *, max_stages: int = 64, grid_points: int = 200) -> T1Result:
    """Build stages until |a*| >= min_a_star (helper for scale-targeted runs)."""
    if min_a_star < 1:
        raise InputError("min_a_star must be >= 1")
    history = _seed()
    while abs(history[-1].a_star) < min_a_star:
        if history[-1].h >= max_stages:
            raise InputError(f"|a*| did not reach {min_a_star} within {max_stages} stages")
        _advance(history)
    return _finish(history, grid_points)
