# cython: boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled hot loops: Bose-Chowla power scans, pair-sum collision detection,
and the greedy B2 sequence. Mirrors the API of ``_kernels_py``."""

from libcpp.vector cimport vector
from libcpp.queue cimport priority_queue
from libcpp.pair cimport pair
from libcpp.unordered_set cimport unordered_set

import numpy as np

ctypedef long long i64
ctypedef unsigned long long u64

BACKEND = "cython"


def bose_chowla_scan(i64 q, i64 fb, i64 fc, i64 ga, i64 gb):
    """Exponents i in [1, q^2-1] with g^i - g in the base field.

    The quadratic extension is F_q[x]/(x^2 + fb*x + fc); g = ga*x + gb is a
    generator of the multiplicative group. g^i - g lies in F_q exactly when
    the x-coefficient of g^i equals ga. Products stay below q^2 < 2^63 for
    any q < 2^31, so plain C arithmetic suffices.
    """
    cdef i64 k1 = (gb - ga * fb) % q
    if k1 < 0:
        k1 += q
    cdef i64 k4 = (-ga * fc) % q
    if k4 < 0:
        k4 += q
    cdef i64 a = ga, b = gb
    cdef i64 order = q * q - 1
    cdef i64 i, na, nb
    cdef vector[i64] hits
    hits.push_back(1)  # g^1 = g, g - g = 0 in F_q
    for i in range(2, order + 1):
        na = (a * k1 + b * ga) % q
        nb = (b * gb + a * k4) % q
        a = na
        b = nb
        if a == ga and i < order:
            hits.push_back(i)
    if a != 0 or b != 1:
        raise AssertionError("generator does not have order q^2 - 1")
    return [hits[i] for i in range(<i64>hits.size())]


def find_sum_collision(i64[::1] arr):
    """First duplicated unordered pair sum of a strictly increasing array.

    Returns (i1, j1, i2, j2) with arr[i1]+arr[j1] == arr[i2]+arr[j2] and
    (i1, j1) != (i2, j2), or None when all pair sums are distinct. Sums are
    streamed in nondecreasing order via an n-way merge, so memory stays O(n)
    no matter how many pairs there are.
    """
    cdef Py_ssize_t n = arr.shape[0]
    if n < 2:
        return None
    # heap entries: (-sum, i, j) because priority_queue is a max-heap
    cdef priority_queue[pair[i64, pair[i64, i64]]] heap
    cdef Py_ssize_t i
    for i in range(n):
        heap.push(pair[i64, pair[i64, i64]](-(arr[i] + arr[i]), pair[i64, i64](i, i)))
    cdef i64 prev_sum = 0, cur_sum
    cdef i64 prev_i = -1, prev_j = -1, ci, cj
    cdef bint have_prev = False
    cdef pair[i64, pair[i64, i64]] top
    while not heap.empty():
        top = heap.top()
        heap.pop()
        cur_sum = -top.first
        ci = top.second.first
        cj = top.second.second
        if have_prev and cur_sum == prev_sum:
            return (int(prev_i), int(prev_j), int(ci), int(cj))
        prev_sum = cur_sum
        prev_i = ci
        prev_j = cj
        have_prev = True
        if cj + 1 < n:
            heap.push(pair[i64, pair[i64, i64]](
                -(arr[ci] + arr[cj + 1]), pair[i64, i64](ci, cj + 1)))
    return None


def mian_chowla(Py_ssize_t count):
    """First `count` terms of the greedy Sidon sequence starting at 1."""
    cdef vector[i64] elems
    cdef unordered_set[i64] sums
    cdef i64 cand = 1
    cdef Py_ssize_t k
    cdef bint ok
    while <Py_ssize_t>elems.size() < count:
        ok = True
        if sums.count(cand + cand):
            ok = False
        else:
            for k in range(<Py_ssize_t>elems.size()):
                if sums.count(cand + elems[k]):
                    ok = False
                    break
        if ok:
            # also reject candidates whose new sums collide with each other:
            # cand + e are distinct (e distinct) and 2*cand != cand + e (e != cand)
            for k in range(<Py_ssize_t>elems.size()):
                sums.insert(cand + elems[k])
            sums.insert(cand + cand)
            elems.push_back(cand)
        cand += 1
    return [elems[k] for k in range(<Py_ssize_t>elems.size())]
