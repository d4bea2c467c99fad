"""Binary64 engine for K = R, L = C.

Realizes the constructive Toeplitz-Hausdorff argument: split a normalized
matrix as H + iK with H, K Hermitian, connect two points of the fiber
{u : <u, K u> = 0} by an explicit path, then bisect along that path on the
real function t -> <u(t), H u(t)>.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np


class ConvergenceError(RuntimeError):
    pass


@dataclass
class ApproxMatrix:
    entries: np.ndarray
    tol: float = 1e-8
    max_iter: int = 200

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=complex)
        if self.entries.ndim != 2 or self.entries.shape[0] != self.entries.shape[1]:
            raise ValueError("approx matrix must be square")
        if not np.all(np.isfinite(self.entries)):
            raise ValueError("approx matrix entries must be finite")

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def from_json(cls, data: dict | str) -> "ApproxMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        rows = [[_parse_complex(x) for x in r] for r in data["entries"]]
        return cls(np.array(rows, dtype=complex))


def _parse_complex(x) -> complex:
    if isinstance(x, (list, tuple)):
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, str):
        return complex(x.replace(" ", "").replace("i", "j"))
    return complex(x)


# --------------------------------------------------------------------------
# Hermitian eigendecomposition


def herm_eig(a: np.ndarray, tol: float = 1e-10, max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic complex Jacobi: returns ascending eigenvalues and unitary U with
    U^H A U = diag(eigenvalues)."""
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    scale = max(np.linalg.norm(a), 1e-300)
    if np.linalg.norm(a - a.conj().T) > tol * scale:
        raise ValueError("herm_eig needs a Hermitian matrix")
    a = (a + a.conj().T) / 2
    v = np.eye(n, dtype=complex)
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        if np.sqrt(np.sum(np.abs(a[offdiag]) ** 2)) <= 1e-14 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                ab = abs(b)
                if ab <= 1e-18 * scale:
                    continue
                phase = b / ab
                tau = (a[q, q].real - a[p, p].real) / (2 * ab)
                if abs(tau) > 1e150:
                    t = 1 / (2 * tau)
                else:
                    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1 + tau * tau))
                c = 1 / np.sqrt(1 + t * t)
                s = t * c
                # J = D R with D = diag(1, conj(phase)) on (p, q)
                j = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ j
                a[idx, :] = j.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0
                v[:, idx] = v[:, idx] @ j
    else:
        raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    lam = np.diag(a).real
    order = np.argsort(lam, kind="stable")
    return lam[order], v[:, order]


def nu(m: np.ndarray, u: np.ndarray) -> complex:
    return complex(np.vdot(u, m @ u))


# --------------------------------------------------------------------------
# fiber path


@dataclass
class FiberPath:
    """Path in {u : <u,u> = 1, <u, K u> = 0} from u to v (K diagonalized by U).

    Thirds of [0, 1]: rotate every coordinate phase to 0, interpolate moduli by
    sqrt((1-s)|a_j|^2 + s|b_j|^2), rotate phases to those of v.
    """

    frame: np.ndarray
    abs_a: np.ndarray
    abs_b: np.ndarray
    phase_a: np.ndarray
    phase_b: np.ndarray
    constant: np.ndarray | None = field(default=None, repr=False)

    def _coords(self, t: float) -> np.ndarray:
        if t <= 1 / 3:
            s = 3 * t
            return self.abs_a * np.exp(1j * (1 - s) * self.phase_a)
        if t <= 2 / 3:
            s = 3 * t - 1
            return np.sqrt((1 - s) * self.abs_a**2 + s * self.abs_b**2).astype(complex)
        s = 3 * t - 2
        return self.abs_b * np.exp(1j * s * self.phase_b)

    def __call__(self, t: float) -> np.ndarray:
        if self.constant is not None:
            return self.constant.copy()
        w = self.frame @ self._coords(float(t))
        return w / np.linalg.norm(w)


def connect_in_fiber(k: np.ndarray, u: np.ndarray, v: np.ndarray, tol: float = 1e-9) -> FiberPath:
    """Explicit path from u to v inside the zero fiber of the Hermitian map nu_K."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    scale = max(1.0, np.linalg.norm(k))
    for name, x in (("u", u), ("v", v)):
        if abs(np.vdot(x, x).real - 1) > tol:
            raise ValueError(f"{name} is not a unit vector")
        if abs(nu(k, x)) > tol * scale:
            raise ValueError(f"{name} is not in the zero fiber: nu = {nu(k, x):.3e}")
    lam, frame = herm_eig(k)
    if np.allclose(u, v, rtol=0, atol=1e-15):
        return FiberPath(frame, np.abs(u), np.abs(u), np.zeros(len(u)), np.zeros(len(u)), constant=u)
    a = frame.conj().T @ u
    b = frame.conj().T @ v
    return FiberPath(frame, np.abs(a), np.abs(b), np.angle(a), np.angle(b))


# --------------------------------------------------------------------------
# segment filling


@dataclass
class FillResult:
    w: np.ndarray
    value: complex
    target: complex
    iterations: int

    @property
    def value_residual(self) -> float:
        return abs(self.value - self.target)

    @property
    def unit_residual(self) -> float:
        return abs(np.vdot(self.w, self.w).real - 1)


def fill_segment(m: np.ndarray, u: np.ndarray, v: np.ndarray, s: float, tol: float = 1e-8, max_iter: int = 200) -> FillResult:
    """Unit w with nu_M(w) = (1 - s) nu_M(u) + s nu_M(v) up to ``tol``."""
    m = np.asarray(m, dtype=complex)
    u = np.asarray(u, dtype=complex) / np.linalg.norm(u)
    v = np.asarray(v, dtype=complex) / np.linalg.norm(v)
    a, b = nu(m, u), nu(m, v)
    if abs(b - a) <= 1e-14 * max(1.0, np.linalg.norm(m)):
        raise ValueError("fill_segment needs nu(u) != nu(v)")
    target = (1 - s) * a + s * b
    if s == 0:
        return FillResult(u, a, target, 0)
    if s == 1:
        return FillResult(v, b, target, 0)
    n = m.shape[0]
    mn = (m - a * np.eye(n)) / (b - a)
    h = (mn + mn.conj().T) / 2
    k = (mn - mn.conj().T) / 2j
    path = connect_in_fiber(k, u, v, tol=max(tol, 1e-9))
    lo, hi = 0.0, 1.0
    for it in range(1, max_iter + 1):
        mid = (lo + hi) / 2
        w = path(mid)
        value = nu(m, w)
        if abs(value - target) <= tol:
            return FillResult(w, value, target, it)
        if nu(h, w).real < s:
            lo = mid
        else:
            hi = mid
    raise ConvergenceError(
        f"bisection stalled on [{lo:.17g}, {hi:.17g}]: residual {abs(value - target):.3e} > {tol:.1e}"
    )


# --------------------------------------------------------------------------
# sampling


def random_unit_vectors(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def sample_range(m: np.ndarray, count: int, seed: int = 0) -> np.ndarray:
    """Values nu_M(u) for ``count`` pseudo-random unit vectors."""
    m = np.asarray(m, dtype=complex)
    us = random_unit_vectors(m.shape[0], count, np.random.default_rng(seed))
    return np.einsum("ki,ij,kj->k", us.conj(), m, us)


def sample_joint_range(m: np.ndarray, n_mat: np.ndarray, count: int, seed: int = 0) -> np.ndarray:
    """(count, 2) complex array of (nu_M(u), nu_N(u))."""
    m = np.asarray(m, dtype=complex)
    n_mat = np.asarray(n_mat, dtype=complex)
    us = random_unit_vectors(m.shape[0], count, np.random.default_rng(seed))
    a = np.einsum("ki,ij,kj->k", us.conj(), m, us)
    b = np.einsum("ki,ij,kj->k", us.conj(), n_mat, us)
    return np.stack([a, b], axis=1)


# --------------------------------------------------------------------------
# 2x2 shape classification


def classify_2x2_algebraic(m: np.ndarray, tol: float = 1e-9) -> str:
    """point / segment / one_focus / two_foci from the traceless part's
    characteristic polynomial t^2 + d and normality."""
    m = np.asarray(m, dtype=complex)
    scale = max(1.0, np.linalg.norm(m))
    m0 = m - np.trace(m) / 2 * np.eye(2)
    if np.linalg.norm(m0) <= tol * scale:
        return "point"
    d = m0[0, 0] * m0[1, 1] - m0[0, 1] * m0[1, 0]
    if abs(d) <= tol * scale**2:
        return "one_focus"
    if np.linalg.norm(m @ m.conj().T - m.conj().T @ m) <= tol * scale**2:
        return "segment"
    return "two_foci"


def _width(m: np.ndarray, theta: float) -> float:
    r = np.exp(-1j * theta) * m
    lam, _ = herm_eig((r + r.conj().T) / 2)
    return lam[-1] - lam[0]


def _golden_min(f, lo: float, hi: float, iters: int = 80) -> float:
    g = (np.sqrt(5) - 1) / 2
    x1, x2 = hi - g * (hi - lo), lo + g * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - g * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + g * (hi - lo)
            f2 = f(x2)
    return min(f1, f2)


def classify_2x2_geometric(m: np.ndarray, tol: float = 1e-7, directions: int = 64) -> str:
    """Shape of Num(M) from its support-function widths, computed with herm_eig."""
    m = np.asarray(m, dtype=complex)
    scale = max(1.0, np.linalg.norm(m))
    thetas = np.linspace(0, np.pi, directions, endpoint=False)
    widths = np.array([_width(m, t) for t in thetas])
    step = thetas[1] - thetas[0]
    i = int(np.argmin(widths))
    wmin = _golden_min(lambda t: _width(m, t), thetas[i] - step, thetas[i] + step)
    j = int(np.argmax(widths))
    wmax = -_golden_min(lambda t: -_width(m, t), thetas[j] - step, thetas[j] + step)
    if wmax <= tol * scale:
        return "point"
    if wmin <= tol * scale:
        return "segment"
    if wmax - wmin <= tol * scale:
        return "one_focus"
    return "two_foci"
