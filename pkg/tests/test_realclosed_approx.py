import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from galnumrange.realclosed_approx import (
    ApproxMatrix,
    ConvergenceError,
    classify_2x2_algebraic,
    classify_2x2_geometric,
    connect_in_fiber,
    fill_segment,
    herm_eig,
    nu,
    random_unit_vectors,
    sample_joint_range,
    sample_range,
)


def random_complex(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


@given(st.integers(0, 10**6), st.integers(1, 6))
def test_herm_eig_matches_numpy(seed, n):
    rng = np.random.default_rng(seed)
    a = random_complex(rng, n)
    a = a + a.conj().T
    lam, u = herm_eig(a)
    assert np.allclose(lam, np.linalg.eigvalsh(a), atol=1e-9)
    assert np.allclose(u.conj().T @ u, np.eye(n), atol=1e-10)
    assert np.allclose(u.conj().T @ a @ u, np.diag(lam), atol=1e-9)


def test_herm_eig_edge_cases():
    lam, u = herm_eig(np.zeros((3, 3)))
    assert np.all(lam == 0) and np.allclose(u, np.eye(3))
    lam, _ = herm_eig(np.diag([3.0, -1.0, 2.0]))
    assert list(lam) == [-1.0, 2.0, 3.0]
    with pytest.raises(ValueError):
        herm_eig(np.array([[0, 1], [0, 0]]))


def test_approx_matrix_validation():
    m = ApproxMatrix.from_json({"approx": True, "entries": [["1+2i", [0, 1]], [3, "-i"]]})
    assert m.n == 2 and m.entries[0, 0] == 1 + 2j and m.entries[1, 1] == -1j
    with pytest.raises(ValueError):
        ApproxMatrix(np.ones((2, 3)))
    with pytest.raises(ValueError):
        ApproxMatrix(np.array([[np.nan, 0], [0, 0]]))


@given(st.integers(0, 10**6), st.integers(2, 5))
def test_fiber_path_stays_in_fiber(seed, n):
    rng = np.random.default_rng(seed)
    k = random_complex(rng, n)
    k = (k + k.conj().T) / 2
    lam, frame = herm_eig(k)
    if lam[0] > -1e-3 or lam[-1] < 1e-3:
        return
    # two unit vectors in the zero fiber built from eigenvectors of opposite sign
    def fiber_point(phase):
        a, b = frame[:, 0], frame[:, -1]
        wa, wb = np.sqrt(lam[-1]), np.sqrt(-lam[0])
        x = wa * a + np.exp(1j * phase) * wb * b
        return x / np.linalg.norm(x)

    u, v = fiber_point(0.3), fiber_point(2.1)
    path = connect_in_fiber(k, u, v)
    assert np.allclose(path(0), u, atol=1e-9) and np.allclose(path(1), v, atol=1e-9)
    for t in np.linspace(0, 1, 31):
        w = path(t)
        assert abs(np.vdot(w, w).real - 1) < 1e-12
        assert abs(nu(k, w)) < 1e-9 * max(1, np.linalg.norm(k))


def test_connect_rejects_points_off_fiber():
    k = np.diag([1.0, -1.0])
    with pytest.raises(ValueError):
        connect_in_fiber(k, np.array([1, 0]), np.array([1, 1]) / np.sqrt(2))
    with pytest.raises(ValueError):
        connect_in_fiber(k, np.array([1, 1]), np.array([1, 1]) / np.sqrt(2))


@given(st.integers(0, 10**6), st.integers(2, 5), st.floats(0, 1))
def test_fill_segment_residuals(seed, n, s):
    rng = np.random.default_rng(seed)
    m = random_complex(rng, n)
    u, v = random_unit_vectors(n, 2, rng)
    if abs(nu(m, u) - nu(m, v)) < 1e-6:
        return
    r = fill_segment(m, u, v, s, tol=1e-8)
    assert r.value_residual <= 1e-8
    assert r.unit_residual <= 1e-12
    assert abs(nu(m, r.w) - r.target) <= 1e-8


def test_fill_segment_errors():
    m = np.eye(2)
    u = np.array([1, 0])
    with pytest.raises(ValueError):
        fill_segment(m, u, np.array([0, 1]), 0.5)
    rng = np.random.default_rng(1)
    m = random_complex(rng, 3)
    u, v = random_unit_vectors(3, 2, rng)
    with pytest.raises(ConvergenceError):
        fill_segment(m, u, v, 0.37, tol=1e-30, max_iter=5)


def test_fill_endpoints():
    m = np.array([[1, 2], [0, 1j]])
    u, v = np.array([1, 0]), np.array([0, 1])
    assert fill_segment(m, u, v, 0).iterations == 0
    assert fill_segment(m, u, v, 1).value == 1j


def test_sampling_deterministic():
    m = np.array([[0, 1], [0, 0]])
    a = sample_range(m, 500, seed=4)
    assert np.array_equal(a, sample_range(m, 500, seed=4))
    assert np.all(np.abs(a) <= 0.5 + 1e-12)  # the disk of radius 1/2
    j = sample_joint_range(m, np.eye(2), 100, seed=1)
    assert j.shape == (100, 2) and np.allclose(j[:, 1], 1)


CASES = [
    (np.eye(2) * (2 - 1j), "point"),
    (np.diag([0, 1 + 1j]), "segment"),
    (np.array([[1, 0], [0, 1]]) + np.array([[0, 2], [0, 0]]), "one_focus"),
    (np.array([[0, 1], [0, 1]]), "two_foci"),
    (np.array([[1j, 3], [0, -1]]), "two_foci"),
    (np.array([[2, 5], [5, -1]]), "segment"),  # Hermitian
]


@pytest.mark.parametrize("m,shape", CASES)
def test_classifiers(m, shape):
    assert classify_2x2_algebraic(m) == shape
    assert classify_2x2_geometric(m) == shape


@given(st.integers(0, 10**6))
def test_classifiers_agree_on_random(seed):
    m = random_complex(np.random.default_rng(seed), 2)
    assert classify_2x2_algebraic(m) == classify_2x2_geometric(m) == "two_foci"
