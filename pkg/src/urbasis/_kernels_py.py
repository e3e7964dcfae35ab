"""Pure-Python fallback for the compiled kernels in ``_kernels.pyx``.

Same contracts, arbitrary-precision friendly, considerably slower. Selected
automatically when the extension is unavailable or when URBASIS_PURE=1.
"""

import heapq

BACKEND = "python"


def bose_chowla_scan(q, fb, fc, ga, gb):
    """Exponents i in [1, q^2-1] with g^i - g in the base field."""
    k1 = (gb - ga * fb) % q
    k4 = (-ga * fc) % q
    a, b = ga, gb
    order = q * q - 1
    hits = [1]
    for i in range(2, order + 1):
        a, b = (a * k1 + b * ga) % q, (b * gb + a * k4) % q
        if a == ga and i < order:
            hits.append(i)
    if a != 0 or b != 1:
        raise AssertionError("generator does not have order q^2 - 1")
    return hits


def find_sum_collision(arr):
    """First duplicated unordered pair sum of a strictly increasing sequence.

    Streams pair sums in nondecreasing order (n-way merge over rows of the
    implicit sum table), so memory is O(n).
    """
    n = len(arr)
    if n < 2:
        return None
    heap = [(arr[i] + arr[i], i, i) for i in range(n)]
    heapq.heapify(heap)
    prev = None
    while heap:
        s, i, j = heapq.heappop(heap)
        if prev is not None and s == prev[0]:
            return (prev[1], prev[2], i, j)
        prev = (s, i, j)
        if j + 1 < n:
            heapq.heappush(heap, (arr[i] + arr[j + 1], i, j + 1))
    return None


def mian_chowla(count):
    """First `count` terms of the greedy Sidon sequence starting at 1."""
    elems = []
    sums = set()
    cand = 1
    while len(elems) < count:
        if 2 * cand not in sums and all(cand + e not in sums for e in elems):
            sums.update(cand + e for e in elems)
            sums.add(2 * cand)
            elems.append(cand)
        cand += 1
    return elems
