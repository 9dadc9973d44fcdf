import math

import numpy as np
import pytest

import permderiv as pd


def test_permanent_kernels():
    assert pd.permanent(np.ones((4, 4))) == pytest.approx(24)
    rng = np.random.default_rng(3)
    a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    assert pd.per_ryser(a, chunks=3) == pytest.approx(pd.per_naive(a), rel=1e-12)
    np.testing.assert_array_equal(pd.padj(np.array([[1.0, 2.0], [3.0, 4.0]])), [[4, 3], [2, 1]])


def test_enumerations():
    assert pd.enumerate_Q(2, 3) == [[1, 2], [1, 3], [2, 3]]
    assert pd.enumerate_G(2, 2) == [[1, 1], [1, 2], [2, 2]]
    assert pd.multiplicity([1, 1, 2, 2, 2], 2) == 12


def test_sym_power_and_derivatives():
    basis, s = pd.sym_power(np.diag([2.0, 3.0]), 2)
    assert basis == [[1, 1], [1, 2], [2, 2]]
    np.testing.assert_allclose(s, np.diag([4, 6, 9]))

    eye = np.eye(3)
    for formula in ("columns", "laplace", "mixed", "trace", "oracle"):
        assert pd.dper(eye, [eye, eye], formula) == pytest.approx(6)
    assert pd.dper(eye, [eye] * 4) == 0

    _, d = pd.dsym_power(np.eye(2), 2, [np.eye(2)])
    np.testing.assert_allclose(d, 2 * np.eye(3))
    np.testing.assert_allclose(pd.dtensor_power(np.eye(2), 2, [np.eye(2)]), 2 * np.eye(4))


def test_symmetrizer_factorization():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    s = pd.symmetrizer(2, 3)
    _, sp = pd.sym_power(a, 2)
    np.testing.assert_allclose(s @ pd.tensor_power(a, 2) @ s.conj().T, sp, atol=1e-12)


def test_norms():
    a = np.diag([2.0, 1.0])
    assert pd.spectral_norm(a) == pytest.approx(2)
    assert pd.trace_norm(a) == pytest.approx(3)
    assert pd.dsym_norm_exact(a, 2, 1) == pytest.approx(4)
    report = pd.verify_norm_identity(a, 3, 2, trials=5, seed=1)
    assert report["pass"]
    assert report["reference"] == pytest.approx(math.factorial(3) * 2)


def test_errors():
    with pytest.raises(pd.DomainError):
        pd.permanent(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        pd.dper(np.eye(2), [np.eye(2)], "taylor")
    with pytest.raises(pd.GuardError):
        pd.tensor_power(np.eye(5), 6)
