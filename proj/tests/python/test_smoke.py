"""Smoke tests for the _qdft extension module."""

import cmath
import math

import numpy as np
import pytest

import _qdft as q


def test_scalar_layer():
    assert abs(q.q_root(1, 4) - 1j) < 1e-15
    assert abs(q.q_root(1, 2) + 1) < 1e-15
    a = q.alpha_param(1, 4)
    assert abs(a - math.sqrt(math.pi / 8) * (1 - 1j)) < 1e-15
    assert abs(cmath.exp(-2 * a * a) - q.q_root(1, 4)) < 1e-13
    assert abs(q.q_pochhammer(0.5, 0.5, 2) - 0.375) < 1e-15
    assert abs(q.q_binomial(4, 2, 1j)) < 1e-14
    assert abs(q.q_binomial(2, 1, 0.3) - 1.3) < 1e-15
    with pytest.raises(ValueError):
        q.q_root(0, 4)


def test_polynomials():
    x = 0.37
    assert abs(q.qhermite_recurrence(2, x, -1.0) - (4 * x * x - 2)) < 1e-14
    assert abs(q.chebyshev_T(2, x) - (2 * x * x - 1)) < 1e-15
    assert abs(q.classical_hermite(3, 1.0) + 4.0) < 1e-14
    zeros = q.chebyshev_zeros(4)
    assert len(zeros) == 4 and all(zeros[i] > zeros[i + 1] for i in range(3))
    assert q.verify_chebyshev_identity(2, 5) < 1e-11
    assert q.verify_factorization(1, 3, 2, 1) < 1e-9


def test_dft():
    m = q.dft_matrix(8)
    assert np.abs(m @ m.conj().T - np.eye(8)).max() < 1e-12
    m2 = m @ m
    assert np.abs(m2 @ m2 - np.eye(8)).max() < 1e-11
    delta = np.zeros(5, dtype=complex)
    delta[0] = 1.0
    assert np.abs(q.apply_dft(delta) - 1 / math.sqrt(5)).max() < 1e-14


def test_transform_identities():
    ys = [-1.0, 0.0, 1.0]
    assert q.verify_hermite_ft(4, ys) < 1e-9
    assert q.verify_prop_3_1(3, 0.5, ys) < 1e-8
    assert q.verify_prop_3_5(3, 1, 3, ys) < 1e-8
    assert q.verify_cos_power(2, 2, 5, ys) < 1e-7


def test_periodization_and_eigenvectors():
    theta = q.mehta_vector(0, 1)
    assert abs(theta["values"][0] - 1.0864348112133080) < 1e-13
    assert theta["tail_bound"] < 1e-14

    f = q.f_q_vector(3, 8, 1, 4)
    g = q.g_q_vector(3, 8, 1, 4)
    assert np.abs(g["values"] - f["values"].conj()).max() < 1e-10

    assert q.verify_k33(4, 5, 1, 3) < 1e-8
    assert q.verify_k33_real(4, 5, 0.5) < 1e-8
    r40, r41 = q.verify_k40_k41(3, 8, 1, 3)
    assert max(r40, r41) < 1e-8

    cands = q.mehta_eigencheck(8)
    assert [int(np.argmax(np.abs(c["values"]))) >= 0 for c in cands]
    assert max(c["residual"] for c in cands) < 1e-9
    assert q.mehta_indices(8) == [0, 1, 2, 3, 4, 5, 6, 8]

    pair = q.q_eigenvectors(2, 8, 1, 4)
    assert pair["F"]["residual"] < 1e-8
    assert pair["G"]["residual"] < 1e-8
    assert pair["F"]["eigenvalue"] == (-1 + 0j)

    paper = q.q_eigenvectors(1, 5, 1, 3, phase="paper")
    assert max(paper["F"]["residual"], paper["G"]["residual"]) > 1e-2

    rep = q.mehta_independence(6)
    assert rep["rank"] == 6
    assert rep["max_offdiag_gram"] > 1e-6


def test_weights_and_limits():
    w = q.solve_discrete_weights(1, 2)
    assert w["ok"]
    assert np.abs(w["weights"] - 0.5).max() < 1e-12
    assert q.solve_discrete_weights(1, 5)["max_residual"] < 1e-9

    assert q.qtolimit_deviation(3, 0.999, 0.7) < q.qtolimit_deviation(3, 0.99, 0.7)
    assert q.qtolimit_deviation_root_of_unity(3, 1, 32, 0.7) < \
        q.qtolimit_deviation_root_of_unity(3, 1, 16, 0.7)


def test_error_mapping():
    with pytest.raises(q.TruncationError):
        q.mehta_vector(0, 3, eps=1e-30)
