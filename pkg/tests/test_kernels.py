"""The numba kernels and their numpy fallbacks must agree exactly."""

import numpy as np
import pytest

from genfoulkes import _kernels
from genfoulkes.characters import mn_character
from genfoulkes.partitions import partitions_of


@pytest.mark.parametrize("n", range(0, 13))
def test_mn_table_backends_agree(n):
    nb = _kernels.mn_table(n, "numba")
    np_ = _kernels.mn_table(n, "numpy")
    assert nb.dtype == np.int64
    assert np.array_equal(nb, np_)


@pytest.mark.parametrize("n", range(1, 9))
def test_mn_table_matches_scalar_recursion(n):
    table = _kernels.mn_table(n)
    parts = partitions_of(n)
    for i, lam in enumerate(parts):
        for j, rho in enumerate(parts):
            assert table[i, j] == mn_character(lam, rho)


def test_mn_table_n16_backends():
    assert np.array_equal(_kernels.mn_table(16, "numba"), _kernels.mn_table(16, "numpy"))


def test_mn_table_rejects_large_n():
    with pytest.raises(ValueError):
        _kernels.mn_table(21)


@pytest.mark.parametrize("n", range(1, 9))
def test_kronecker_cube_backends_agree(n):
    assert np.array_equal(_kernels.kronecker_cube(n, "numba"), _kernels.kronecker_cube(n, "numpy"))


def test_kronecker_cube_object_path(monkeypatch):
    # force the Python-integer path and compare with int64
    expected = _kernels.kronecker_cube(6)
    monkeypatch.setattr(_kernels, "INT64_SAFE", 0)
    got = _kernels.kronecker_cube(6)
    assert got.dtype == object
    assert (got == expected).all()


def test_rim_hook_removal():
    assert sorted(_kernels._remove_rim_hooks((2, 1), 3)) == [((), -1)]
    assert sorted(_kernels._remove_rim_hooks((2, 1), 2)) == []
    assert sorted(_kernels._remove_rim_hooks((3,), 3)) == [((), 1)]
    assert sorted(_kernels._remove_rim_hooks((1, 1, 1), 3)) == [((), 1)]
    assert sorted(_kernels._remove_rim_hooks((2, 2), 3)) == [((1,), -1)]
