"""Exact set algebra for finite sets of arbitrary-precision integers.

This is the universal carrier for every set the constructions touch:
representation counting r(n), sumsets, difference sets, interval counting,
the minimum-|m| unrepresented integer search, Sidon checks, and the
unique-representation prefix check. All operations are pure functions of
immutable inputs.
"""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from urbasis import kernels
from urbasis.errors import InputError


class IntSet:
    """A finite, strictly increasing sequence of integers."""

    __slots__ = ("elements",)

    def __init__(self, elements: Sequence[int] = (), *, _trusted: bool = False):
        if _trusted:
            self.elements: Tuple[int, ...] = tuple(elements)
            return
        elems = tuple(sorted(set(int(e) for e in elements)))
        self.elements = elems

    @classmethod
    def _from_sorted(cls, elements: Sequence[int]) -> "IntSet":
        # caller guarantees strictly increasing
        return cls(elements, _trusted=True)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, value: int) -> bool:
        i = bisect_left(self.elements, value)
        return i < len(self.elements) and self.elements[i] == value

    def __eq__(self, other) -> bool:
        return isinstance(other, IntSet) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        if len(self) > 8:
            head = ", ".join(map(str, self.elements[:4]))
            return f"IntSet({{{head}, ... }} |{len(self)}|)"
        return f"IntSet({{{', '.join(map(str, self.elements))}}})"

    def union(self, other: Iterable[int]) -> "IntSet":
        return IntSet(list(self.elements) + list(other))

    def issubset(self, other: "IntSet") -> bool:
        return all(e in other for e in self.elements)

    def min(self) -> int:
        if not self.elements:
            raise InputError("empty set has no minimum")
        return self.elements[0]

    def max(self) -> int:
        if not self.elements:
            raise InputError("empty set has no maximum")
        return self.elements[-1]

    # --- serialization -----------------------------------------------------

    def to_json(self) -> str:
        """Newline-free JSON array of decimal strings (exact at any size)."""
        return "[" + ",".join(f'"{e}"' for e in self.elements) + "]"

    @classmethod
    def from_json(cls, text: str) -> "IntSet":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"not a JSON array: {exc}") from exc
        if not isinstance(data, list):
            raise InputError("expected a JSON array of decimal strings")
        try:
            return cls(int(item) for item in data)
        except (TypeError, ValueError) as exc:
            raise InputError(f"non-integer entry in array: {exc}") from exc

    @classmethod
    def from_lines(cls, text: str) -> "IntSet":
        """One decimal integer per line; '#' starts a comment."""
        values = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                values.append(int(line))
            except ValueError as exc:
                raise InputError(f"line {lineno}: not an integer: {line!r}") from exc
        return cls(values)


@dataclass(frozen=True)
class RepRecord:
    """r_A(n) together with all witnesses (a, a'), a <= a', ascending in a."""

    n: int
    count: int
    witnesses: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class SumCollision:
    """Two distinct unordered pairs with equal sum."""

    n: int
    first: Tuple[int, int]
    second: Tuple[int, int]


@dataclass(frozen=True)
class SidonReport:
    ok: bool
    violation: Optional[SumCollision]

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class UniqueBasisReport:
    """Result of the prefix check: r <= 1 everywhere, r = 1 for |n| <= H."""

    ok: bool
    failure_kind: Optional[str]  # "multiple_representation" | "missing_representation"
    counterexample: Optional[int]
    collision: Optional[SumCollision]


def rep_count(A: IntSet, n: int) -> RepRecord:
    """Number of unordered representations n = a + a' (a <= a') in A.

    Two-pointer scan over the sorted elements, O(|A|) per query.
    """
    elems = A.elements
    witnesses = []
    lo, hi = 0, len(elems) - 1
    while lo <= hi:
        s = elems[lo] + elems[hi]
        if s == n:
            witnesses.append((elems[lo], elems[hi]))
            lo += 1
            hi -= 1
        elif s < n:
            lo += 1
        else:
            hi -= 1
    return RepRecord(n=n, count=len(witnesses), witnesses=tuple(witnesses))


def rep_exists(A: IntSet, n: int) -> bool:
    """True iff r_A(n) >= 1 (early-exit two-pointer)."""
    elems = A.elements
    if not elems or n < 2 * elems[0] or n > 2 * elems[-1]:
        return False
    lo, hi = 0, len(elems) - 1
    while lo <= hi:
        s = elems[lo] + elems[hi]
        if s == n:
            return True
        if s < n:
            lo += 1
        else:
            hi -= 1
    return False


def _abs_scan_order(bound: int) -> Iterator[int]:
    # 0, 1, -1, 2, -2, ...: ties between +k and -k break positive
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


def min_unrepresented(A: IntSet) -> int:
    """The integer m of minimum |m| with r_A(m) = 0; +k wins a +-k tie.

    The scan is bounded by 2*|max_abs(A)| + 1, beyond which no pair sum can
    reach, so a hit is guaranteed for nonempty A.
    """
    if not len(A):
        raise InputError("min_unrepresented requires a nonempty set")
    bound = 2 * abs(max_abs(A)) + 1
    for m in _abs_scan_order(bound):
        if not rep_exists(A, m):
            return m
    raise AssertionError("unreachable: 2*max_abs+1 is never a pair sum")


def counting(A: IntSet, y, x) -> int:
    """|A intersect [y, x]|, endpoints inclusive. Accepts integer or real bounds."""
    if y > x:
        raise InputError(f"counting requires y <= x, got y={y}, x={x}")
    return bisect_right(A.elements, x) - bisect_left(A.elements, y)


def max_abs(A: IntSet) -> int:
    """The element of maximum absolute value; +k wins a +-k tie."""
    if not len(A):
        raise InputError("max_abs requires a nonempty set")
    lo, hi = A.elements[0], A.elements[-1]
    return hi if abs(hi) >= abs(lo) else lo


def sumset(A: IntSet, B: IntSet) -> IntSet:
    """{a + b : a in A, b in B}."""
    return IntSet({a + b for a in A.elements for b in B.elements})


def diffset(A: IntSet) -> IntSet:
    """{a - a' : a, a' in A}; symmetric about 0, contains 0 when A is nonempty."""
    out = set()
    elems = A.elements
    for i, a in enumerate(elems):
        for b in elems[i:]:
            d = b - a
            out.add(d)
            out.add(-d)
    return IntSet(out)


def first_sum_collision(A: IntSet) -> Optional[SumCollision]:
    """Smallest value represented by two distinct unordered pairs, if any."""
    hit = kernels.find_sum_collision(A.elements)
    if hit is None:
        return None
    i1, j1, i2, j2 = hit
    e = A.elements
    return SumCollision(
        n=e[i1] + e[j1], first=(e[i1], e[j1]), second=(e[i2], e[j2])
    )


def is_sidon(S: IntSet) -> SidonReport:
    """All unordered pair sums (doubles included) distinct?

    Equivalent to r_S(n) <= 1 for every n.
    """
    collision = first_sum_collision(S)
    return SidonReport(ok=collision is None, violation=collision)


def is_unique_basis_prefix(A: IntSet, H: int) -> UniqueBasisReport:
    """Check r_A <= 1 on the whole representable range and r_A = 1 for |n| <= H.

    Failures are data, not errors; the report carries the first counterexample.
    """
    if H < 0:
        raise InputError("H must be nonnegative")
    collision = first_sum_collision(A)
    if collision is not None:
        return UniqueBasisReport(
            ok=False,
            failure_kind="multiple_representation",
            counterexample=collision.n,
            collision=collision,
        )
    for n in _abs_scan_order(H):
        if abs(n) > H:
            break
        if not rep_exists(A, n):
            return UniqueBasisReport(
                ok=False,
                failure_kind="missing_representation",
                counterexample=n,
                collision=None,
            )
    return UniqueBasisReport(ok=True, failure_kind=None, counterexample=None, collision=None)
