import os
import subprocess
import sys

import numpy as np
import pytest

from nilhodge import _kernels


def _random_batch(seed, n=40, m=5):
    rng = np.random.default_rng(seed)
    return rng.integers(-3, 4, size=(n, m, m)), np.arange(-2, 4)


def _reference(mats, points):
    eye = np.eye(mats.shape[1])
    return np.array(
        [[round(np.linalg.det(eye - p * a)) for p in points] for a in mats], dtype=np.int64
    )


@pytest.mark.parametrize("seed", range(4))
def test_numpy_backend_matches_float_det(seed):
    mats, points = _random_batch(seed)
    assert np.array_equal(_kernels.det_shifted_numpy(mats, points), _reference(mats, points))


@pytest.mark.skipif(not _kernels._HAVE_NUMBA, reason="numba not installed")
@pytest.mark.parametrize("seed", range(4))
def test_backends_agree(seed):
    mats, points = _random_batch(seed)
    assert np.array_equal(
        _kernels.det_shifted_numba(mats, points), _kernels.det_shifted_numpy(mats, points)
    )


def test_singular_and_zero_matrices():
    mats = np.array([np.zeros((3, 3)), np.eye(3), np.ones((3, 3))], dtype=np.int64)
    points = np.array([0, 1, 2])
    got = _kernels.det_shifted_numpy(mats, points)
    assert got.tolist() == [[1, 1, 1], [1, 0, -1], [1, -2, -5]]
    if _kernels._HAVE_NUMBA:
        assert np.array_equal(_kernels.det_shifted_numba(mats, points), got)


def test_env_flag_selects_numpy():
    env = dict(os.environ, NILHODGE_NUMBA="0")
    out = subprocess.run(
        [sys.executable, "-c", "from nilhodge import _kernels; print(_kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
