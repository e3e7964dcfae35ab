"""Finite Sidon set constructions.

Three constructions are provided: the quadratic-extension construction
(cardinality q inside [1, q^2-1], the workhorse, since its density reaches
the sqrt(n) main term), the classical 2pk + (k^2 mod p) construction
(density sqrt(n/2), kept as a cross-check), and the greedy B2 sequence
(baseline oracle). Every returned set is re-verified Sidon by brute force
before it leaves this module; construction bugs surface as errors, never
as bad data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple

import sympy

from urbasis import kernels
from urbasis.errors import BuildInfeasible, DensityShortfall, InputError, InvariantViolation
from urbasis.intset import IntSet, is_sidon


class Method(str, Enum):
    BOSE_CHOWLA = "bose_chowla"
    ERDOS_TURAN = "erdos_turan"
    MIAN_CHOWLA = "mian_chowla"


@dataclass(frozen=True)
class SidonResult:
    set: IntSet
    method: Method
    n_bound: int  # the set lives in [0, n_bound)
    cardinality: int
    density_gap: float  # sqrt(n_bound) - cardinality
    param: Optional[int] = None  # q or p for the field constructions


@dataclass(frozen=True)
class PrimeFieldExt:
    """A quadratic extension of F_q: F_q[x] / (x^2 + b*x + c), with a fixed
    generator g = ga*x + gb of the (q^2 - 1)-element multiplicative group."""

    q: int
    modulus: Tuple[int, int]  # (b, c), monic x^2 + b*x + c
    generator: Tuple[int, int]  # (ga, gb), meaning ga*x + gb

    def mul(self, u: Tuple[int, int], v: Tuple[int, int]) -> Tuple[int, int]:
        q = self.q
        b, c = self.modulus
        ua, ub = u
        va, vb = v
        # x^2 == -b*x - c
        hi = ua * va
        return ((ua * vb + ub * va - hi * b) % q, (ub * vb - hi * c) % q)

    def pow(self, u: Tuple[int, int], e: int) -> Tuple[int, int]:
        result = (0, 1)
        base = u
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def element_order(self, u: Tuple[int, int]) -> int:
        if u == (0, 0):
            raise InputError("zero has no multiplicative order")
        group = self.q * self.q - 1
        order = group
        for p in sympy.factorint(group):
            while order % p == 0 and self.pow(u, order // p) == (0, 1):
                order //= p
        return order


def _require_prime(value: int, name: str) -> None:
    if not sympy.isprime(value):
        raise InputError(f"{name} must be prime, got {value}")


def _irreducible_quadratic(q: int) -> Tuple[int, int]:
    """First monic irreducible x^2 + b*x + c over F_q in lexicographic (b, c)
    order, irreducibility tested by root exhaustion."""
    for b in range(q):
        for c in range(q):
            if all((x * x + b * x + c) % q != 0 for x in range(q)):
                return (b, c)
    raise AssertionError(f"no irreducible quadratic over F_{q}")  # impossible for prime q


def prime_field_ext(q: int) -> PrimeFieldExt:
    """Deterministic quadratic extension of F_q with a verified generator."""
    _require_prime(q, "q")
    modulus = _irreducible_quadratic(q)
    probe = PrimeFieldExt(q=q, modulus=modulus, generator=(0, 1))
    group = q * q - 1
    primes = list(sympy.factorint(group))
    for a in range(q):
        for b in range(q):
            if a == 0 and b <= 1:
                continue  # 0 and 1 are never generators
            cand = (a, b)
            if all(probe.pow(cand, group // p) != (0, 1) for p in primes):
                return PrimeFieldExt(q=q, modulus=modulus, generator=cand)
    raise AssertionError(f"no generator found for F_{q}^2")  # the group is cyclic


def _verified(result: SidonResult) -> SidonResult:
    report = is_sidon(result.set)
    if not report.ok:
        raise InvariantViolation(
            f"{result.method.value} produced a non-Sidon set: "
            f"{report.violation.n} = {report.violation.first} = {report.violation.second}"
        )
    if len(result.set) and not (0 <= result.set.min() and result.set.max() < result.n_bound):
        raise InvariantViolation(
            f"{result.method.value} elements escape [0, {result.n_bound})"
        )
    return result


def bose_chowla(q: int) -> SidonResult:
    """Sidon set of cardinality exactly q inside [1, q^2 - 1].

    Elements are the exponents i with g^i - g in the base field; at this
    scale they are extracted by one pass over all powers of g.
    """
    _require_prime(q, "q")
    ext = prime_field_ext(q)
    b, c = ext.modulus
    ga, gb = ext.generator
    exponents = kernels.bose_chowla_scan(q, b, c, ga, gb)
    if len(exponents) != q:
        raise InvariantViolation(
            f"bose_chowla({q}): expected {q} exponents, got {len(exponents)}"
        )
    elems = IntSet._from_sorted(exponents)
    if elems.min() < 1 or elems.max() > q * q - 1:
        raise InvariantViolation(f"bose_chowla({q}): exponents escape [1, q^2-1]")
    n_bound = q * q
    return _verified(
        SidonResult(
            set=elems,
            method=Method.BOSE_CHOWLA,
            n_bound=n_bound,
            cardinality=q,
            density_gap=math.sqrt(n_bound) - q,
            param=q,
        )
    )


def erdos_turan(p: int) -> SidonResult:
    """Sidon set {2pk + (k^2 mod p) : 0 <= k < p} of cardinality p in [0, 2p^2)."""
    _require_prime(p, "p")
    elems = IntSet._from_sorted([2 * p * k + (k * k) % p for k in range(p)])
    n_bound = 2 * p * p
    return _verified(
        SidonResult(
            set=elems,
            method=Method.ERDOS_TURAN,
            n_bound=n_bound,
            cardinality=p,
            density_gap=math.sqrt(n_bound) - p,
            param=p,
        )
    )


def mian_chowla(count: int) -> SidonResult:
    """First `count` terms of the greedy Sidon sequence 1, 2, 4, 8, 13, 21, ..."""
    if count < 0:
        raise InputError(f"count must be >= 0, got {count}")
    elems = IntSet._from_sorted(kernels.mian_chowla(count))
    n_bound = (elems.max() + 1) if count else 0
    return _verified(
        SidonResult(
            set=elems,
            method=Method.MIAN_CHOWLA,
            n_bound=n_bound,
            cardinality=count,
            density_gap=math.sqrt(n_bound) - count,
        )
    )


# below this interval length, prime gaps under isqrt(n) can cost more
# density than the greedy sequence loses, so both are built and compared
_GREEDY_FALLBACK_BOUND = 1024


def _greedy_below(n: int) -> Tuple[int, ...]:
    """All greedy Sidon terms below n (only used for small n)."""
    elems: list = []
    sums: set = set()
    for cand in range(1, n):
        if 2 * cand not in sums and all(cand + e not in sums for e in elems):
            sums.update(cand + e for e in elems)
            sums.add(2 * cand)
            elems.append(cand)
    return tuple(elems)


def sidon_in_interval(
    n: int,
    target_density: float = 0.0,
    *,
    max_prime: Optional[int] = None,
) -> SidonResult:
    """Densest available Sidon set inside [0, n): bose_chowla at the largest
    prime q with q^2 - 1 < n, or the greedy sequence when n is small enough
    for a prime gap to leave the greedy set denser.

    Raises DensityShortfall when the achieved cardinality falls below
    target_density * sqrt(n) (the comparison is exact, via squaring), and
    BuildInfeasible when the required prime exceeds `max_prime`.
    """
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    top = isqrt(n)  # q^2 - 1 < n  <=>  q <= isqrt(n)
    if top < 2:
        raise DensityShortfall(f"no prime q with q^2 - 1 < {n}")
    q = top if sympy.isprime(top) else int(sympy.prevprime(top))
    if q < 2:
        raise DensityShortfall(f"no prime q with q^2 - 1 < {n}")
    if max_prime is not None and q > max_prime:
        raise BuildInfeasible(
            f"sidon_in_interval({n}) needs bose_chowla({q}), above the cap "
            f"max_prime={max_prime} (construction and verification cost grow as q^2)",
            required_prime=q,
        )
    result = bose_chowla(q)
    elems, method, param = result.set, Method.BOSE_CHOWLA, q
    if n < _GREEDY_FALLBACK_BOUND:
        greedy = _greedy_below(n)
        if len(greedy) > len(elems):
            elems, method, param = IntSet._from_sorted(greedy), Method.MIAN_CHOWLA, None
    cardinality = len(elems)
    target = Fraction(target_density)
    if target > 0 and cardinality * cardinality < target * target * n:
        raise DensityShortfall(
            f"sidon_in_interval({n}): cardinality {cardinality} "
            f"< {target_density} * sqrt({n})"
        )
    return _verified(
        SidonResult(
            set=elems,
            method=method,
            n_bound=n,
            cardinality=cardinality,
            density_gap=math.sqrt(n) - cardinality,
            param=param,
        )
    )
