import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from urbasis import _kernels_py, kernels
from urbasis.sidon import prime_field_ext

try:
    from urbasis import _kernels
except ImportError:
    _kernels = None

needs_extension = pytest.mark.skipif(
    _kernels is None, reason="compiled extension unavailable"
)

sorted_unique = st.lists(
    st.integers(min_value=-(10**9), max_value=10**9), max_size=40, unique=True
).map(sorted)


class TestPureFallback:
    def test_mian_chowla_prefix(self):
        assert _kernels_py.mian_chowla(8) == [1, 2, 4, 8, 13, 21, 31, 45]

    def test_find_sum_collision_none_on_sidon(self):
        assert _kernels_py.find_sum_collision([1, 2, 4, 8, 13]) is None

    def test_find_sum_collision_minimal(self):
        # 1+3 = 2+2 = 4 is the smallest duplicated sum
        hit = _kernels_py.find_sum_collision([1, 2, 3, 4])
        i1, j1, i2, j2 = hit
        arr = [1, 2, 3, 4]
        assert arr[i1] + arr[j1] == arr[i2] + arr[j2] == 4

    def test_bose_chowla_scan_counts(self):
        for q in (2, 3, 5, 7):
            ext = prime_field_ext(q)
            b, c = ext.modulus
            ga, gb = ext.generator
            hits = _kernels_py.bose_chowla_scan(q, b, c, ga, gb)
            assert len(hits) == q
            assert hits[0] == 1
            assert all(1 <= i <= q * q - 1 for i in hits)

    def test_bose_chowla_scan_matches_field_arithmetic(self):
        # oracle: evaluate g^i with generic field powering
        q = 7
        ext = prime_field_ext(q)
        b, c = ext.modulus
        ga, gb = ext.generator
        hits = set(_kernels_py.bose_chowla_scan(q, b, c, ga, gb))
        for i in range(1, q * q - 1):
            a_i, _ = ext.pow(ext.generator, i)
            assert (a_i == ga) == (i in hits)


@needs_extension
class TestCompiledAgreement:
    def test_mian_chowla(self):
        import numpy as np  # noqa: F401  (extension returns plain lists)

        assert list(_kernels.mian_chowla(20)) == _kernels_py.mian_chowla(20)

    @given(sorted_unique)
    @settings(max_examples=200)
    def test_find_sum_collision(self, arr):
        import numpy as np

        compiled = _kernels.find_sum_collision(np.asarray(arr, dtype=np.int64))
        pure = _kernels_py.find_sum_collision(arr)
        if pure is None:
            assert compiled is None
        else:
            # both must report the same (minimal) duplicated sum
            ci1, cj1, _, _ = compiled
            pi1, pj1, _, _ = pure
            assert arr[ci1] + arr[cj1] == arr[pi1] + arr[pj1]

    def test_bose_chowla_scan(self):
        for q in (5, 11, 31):
            ext = prime_field_ext(q)
            b, c = ext.modulus
            ga, gb = ext.generator
            assert list(_kernels.bose_chowla_scan(q, b, c, ga, gb)) == list(
                _kernels_py.bose_chowla_scan(q, b, c, ga, gb)
            )


class TestSelector:
    def test_backend_reported(self):
        assert kernels.BACKEND in ("cython", "python")

    def test_bigint_routing(self):
        # elements beyond 62 bits must take the arbitrary-precision path
        huge = [2**70, 2**70 + 1, 2**70 + 2]
        hit = kernels.find_sum_collision(tuple(huge))
        i1, j1, i2, j2 = hit
        assert huge[i1] + huge[j1] == huge[i2] + huge[j2]

    def test_pure_env_override(self):
        out = subprocess.run(
            [sys.executable, "-c", "from urbasis import kernels; print(kernels.BACKEND)"],
            env={**os.environ, "URBASIS_PURE": "1"},
            capture_output=True,
            text=True,
            check=True,
        )
        assert out.stdout.strip() == "python"
