import os
import subprocess
import sys

import numpy as np
import pytest

from spinclock import kernels
from spinclock.grids import sphere_grid


def test_backends_agree_on_amplitudes():
    rng = np.random.default_rng(3)
    xi = (rng.normal(size=200) + 1j * rng.normal(size=200)) * 2
    xi[0] = 0.0
    for two_j in (1, 7, 40):
        hlb = kernels._log_binomial_halves(two_j)
        a = np.empty((len(xi), two_j + 1), dtype=np.complex128)
        b = np.empty_like(a)
        kernels._amplitudes_numpy(xi, two_j, hlb, a)
        if kernels.NUMBA_ENABLED:
            kernels._amplitudes_jit(np.ascontiguousarray(xi), two_j, hlb, b)
            assert np.max(np.abs(a - b)) < 5e-14


def test_backends_agree_on_accumulation():
    rng = np.random.default_rng(4)
    vecs = (rng.normal(size=(300, 9)) + 1j * rng.normal(size=(300, 9)))
    coeff = rng.normal(size=300).astype(np.complex128)
    acc_np = np.zeros((9, 9), dtype=np.complex128)
    kernels._accumulate_numpy(vecs, coeff, acc_np)
    if kernels.NUMBA_ENABLED:
        acc_nb = np.zeros((9, 9), dtype=np.complex128)
        kernels._accumulate_jit(np.ascontiguousarray(vecs), coeff, acc_nb)
        assert np.max(np.abs(acc_np - acc_nb)) < 1e-12


def test_amplitudes_normalized_at_extreme_arguments():
    for xi in (1e-8, 1e4, 200j, 50 - 50j):
        v = kernels.coherent_amplitudes(np.array([xi]), 200)[0]
        assert np.vdot(v, v).real == pytest.approx(1.0, abs=1e-11)


def test_accumulate_matches_direct_sum():
    grid = sphere_grid(2.0)
    vecs = kernels.coherent_amplitudes(grid.xi, 4)
    acc = kernels.accumulate_projectors(vecs, grid.weights)
    direct = sum(w * np.outer(v, v.conj()) for v, w in zip(vecs, grid.weights))
    assert np.max(np.abs(acc - direct)) < 1e-13


def test_env_flag_disables_numba():
    env = dict(os.environ, SPINCLOCK_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from spinclock import kernels; print(kernels.NUMBA_ENABLED)"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "False"


def test_fallback_backend_full_pipeline():
    env = dict(os.environ, SPINCLOCK_NO_NUMBA="1")
    code = (
        "import numpy as np\n"
        "from spinclock import resolution_of_unity\n"
        "err = np.max(np.abs(resolution_of_unity(5.0) - np.eye(11)))\n"
        "assert err < 1e-10, err\n"
        "print('ok')\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True,
                         text=True, env=env, check=True)
    assert out.stdout.strip() == "ok"
