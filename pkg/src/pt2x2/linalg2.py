"""
Closed-form complex 2x2 linear algebra.

Matrices are ``(2, 2)`` complex ndarrays and vectors are ``(2,)`` complex
ndarrays; scalars are plain Python ``complex``/``float``. Everything here is a
pure function of its inputs.

Norms are Frobenius norms unless noted otherwise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import NegativeEigenvalue, NonFinite, NotHermitian, SingularFactor

# predicate / contract tolerance and equality tolerance, both scale-relative via (1 + |.|)
PREDICATE_TOL = 1e-10
EQUALITY_TOL = 1e-12

IDENTITY = np.eye(2, dtype=complex)


@dataclass(frozen=True, eq=False)
class EigenSystem2:
    """Two eigenpairs of a 2x2 matrix.

    ``degenerate`` is only set for defective input (an exceptional point),
    in which case ``v1`` and ``v2`` are the same vector.
    """

    lambda1: complex
    lambda2: complex
    v1: np.ndarray
    v2: np.ndarray
    degenerate: bool

    @property
    def eigenvalues(self) -> tuple[complex, complex]:
        return (self.lambda1, self.lambda2)


@dataclass(frozen=True, eq=False)
class PolarFactors:
    """Left polar factors ``h = u @ r`` with ``u`` unitary and ``r`` PSD Hermitian."""

    u: np.ndarray
    r: np.ndarray


def as_matrix(m) -> np.ndarray:
    a = np.array(m, dtype=complex)
    if a.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFinite("matrix has NaN or infinite entries")
    return a


def as_vector(v) -> np.ndarray:
    a = np.array(v, dtype=complex)
    if a.shape != (2,):
        raise ValueError(f"expected a 2-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFinite("vector has NaN or infinite entries")
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.transpose(m))


def fnorm(m) -> float:
    return float(np.linalg.norm(m))


def trace(m) -> complex:
    m = as_matrix(m)
    return complex(m[0, 0] + m[1, 1])


def det(m) -> complex:
    m = as_matrix(m)
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def is_hermitian(m, tol: float = PREDICATE_TOL) -> bool:
    if not tol > 0:
        raise ValueError("tol must be positive")
    m = as_matrix(m)
    return fnorm(m - dagger(m)) <= tol


def is_unitary(m, tol: float = PREDICATE_TOL) -> bool:
    if not tol > 0:
        raise ValueError("tol must be positive")
    m = as_matrix(m)
    return fnorm(dagger(m) @ m - IDENTITY) <= tol


def _unit(v: np.ndarray) -> np.ndarray:
    # exact power-of-two rescale first: a subnormal largest entry would overflow 1/max
    _, e = math.frexp(float(np.max(np.abs(v))))
    v = np.ldexp(v.real, -e) + 1j * np.ldexp(v.imag, -e)
    return v / np.linalg.norm(v)


def _fix_phase(v: np.ndarray) -> np.ndarray:
    # unit norm, largest component real and positive
    v = _unit(v)
    k = int(np.argmax(np.abs(v)))
    return v * (abs(v[k]) / v[k])


def _eigvec(m: np.ndarray, lam: complex) -> np.ndarray:
    # null vector of m - lam*I: each row gives a candidate, keep the better conditioned one
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    va = np.array([b, lam - a])
    vb = np.array([lam - d, c])
    v = va if np.linalg.norm(va) >= np.linalg.norm(vb) else vb
    return _fix_phase(v)


def eigen2(m) -> EigenSystem2:
    """Eigenvalues and eigenvectors of a general complex 2x2 matrix.

    The roots of ``lam**2 - tr*lam + det`` are taken in the cancellation-free
    form: the larger-magnitude root first, then ``det / lam1``. The
    discriminant is evaluated as ``((a - d)/2)**2 + b*c``, which keeps the
    splitting exact for matrices with equal diagonals.

    Raises
    ------
    NonFinite
        If ``m`` contains NaN or infinite entries.
    """
    m = as_matrix(m)
    a, b, c, d = (complex(x) for x in m.ravel())
    mean = 0.5 * (a + d)
    half = 0.5 * (a - d)
    sq = cmath.sqrt(half * half + b * c)
    if (mean.conjugate() * sq).real < 0:
        sq = -sq
    lam1 = mean + sq
    determinant = a * d - b * c
    lam2 = determinant / lam1 if lam1 != 0 else mean - sq

    if abs(lam1 - lam2) <= EQUALITY_TOL * (1 + abs(lam1) + abs(lam2)):
        if fnorm(m - mean * IDENTITY) <= EQUALITY_TOL * (1 + fnorm(m)):
            # scalar matrix: every vector is an eigenvector
            return EigenSystem2(lam1, lam2, IDENTITY[:, 0].copy(), IDENTITY[:, 1].copy(), False)
        v = _eigvec(m, mean)
        return EigenSystem2(lam1, lam2, v, v.copy(), True)

    return EigenSystem2(lam1, lam2, _eigvec(m, lam1), _eigvec(m, lam2), False)


def _perp(v: np.ndarray) -> np.ndarray:
    return np.array([-np.conj(v[1]), np.conj(v[0])])


def eigh2(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian 2x2 matrix.

    Returns ``(w, v)`` with real eigenvalues ``w`` in descending order and
    orthonormal eigenvectors as the columns of ``v``. Only the upper triangle
    and the real part of the diagonal are read.
    """
    m = as_matrix(m)
    a = m[0, 0].real
    d = m[1, 1].real
    c = complex(m[0, 1])
    t = 0.5 * (a + d)
    z = 0.5 * (a - d)
    rho = math.hypot(z, abs(c))
    w = np.array([t + rho, t - rho])
    if rho == 0:
        return w, IDENTITY.copy()
    if z >= 0:
        hi = _unit(np.array([z + rho, c.conjugate()]))
    else:
        hi = _unit(np.array([c, rho - z]))
    return w, np.column_stack([hi, _perp(hi)])


def _spectral(v: np.ndarray, w) -> np.ndarray:
    return (v * np.asarray(w, dtype=float)) @ dagger(v)


def _hermitian_part(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + dagger(m))


def sqrt_psd(m) -> np.ndarray:
    """Unique positive-semidefinite square root of a Hermitian PSD matrix.

    Computed from the spectral decomposition; eigenvalues down to
    ``-1e-10 * (1 + |m|)`` are clamped to zero.

    Raises
    ------
    NotHermitian
        If ``|m - m^H| > 1e-10 * (1 + |m|)``.
    NegativeEigenvalue
        If the smallest eigenvalue is below the clamp threshold.
    """
    m = as_matrix(m)
    scale = 1 + fnorm(m)
    if not is_hermitian(m, PREDICATE_TOL * scale):
        raise NotHermitian("sqrt_psd needs a Hermitian matrix")
    (hi, lo), v = eigh2(_hermitian_part(m))
    if lo < -PREDICATE_TOL * scale:
        raise NegativeEigenvalue(f"smallest eigenvalue {lo:.3e} is negative")
    return _spectral(v, [math.sqrt(max(hi, 0.0)), math.sqrt(max(lo, 0.0))])


def singular_values(h) -> tuple[float, float]:
    """Singular values ``(largest, smallest)`` of ``h``.

    The smallest is recovered as ``|det h| / largest`` rather than from the
    small eigenvalue of ``h^H h``, which loses half the digits.
    """
    h = as_matrix(h)
    (hi, _), _ = eigh2(_hermitian_part(dagger(h) @ h))
    smax = math.sqrt(max(hi, 0.0))
    if smax == 0:
        return 0.0, 0.0
    return smax, min(abs(det(h)) / smax, smax)


def polar(h, *, allow_singular: bool = False) -> PolarFactors:
    """Polar decomposition ``h = u @ r`` with ``r = sqrt(h^H h)``.

    ``r`` is assembled from the eigenvectors ``v_hi, v_lo`` of ``h^H h`` and
    the singular values. ``u`` maps ``v_hi`` to ``h v_hi / s_max`` and
    ``v_lo`` to the orthogonal complement of that vector, phase-matched to
    ``h v_lo``; this keeps ``u`` unitary to rounding even when ``r`` is
    badly conditioned. With ``allow_singular`` the same construction
    completes ``u`` on the null space of a singular ``r``.

    Raises
    ------
    SingularFactor
        If the smallest eigenvalue of ``r`` is at most ``1e-12 * |h|`` and
        ``allow_singular`` is false.
    """
    h = as_matrix(h)
    smax, smin = singular_values(h)
    if not allow_singular and (smax == 0 or smin <= EQUALITY_TOL * fnorm(h)):
        raise SingularFactor(f"positive factor is singular (smallest singular value {smin:.3e})")
    if smax == 0:
        return PolarFactors(u=IDENTITY.copy(), r=np.zeros((2, 2), dtype=complex))
    _, v = eigh2(_hermitian_part(dagger(h) @ h))
    u_hi = _unit(h @ v[:, 0])
    u_lo = _perp(u_hi)
    overlap = np.vdot(u_lo, h @ v[:, 1])
    if overlap != 0:
        u_lo = u_lo * (overlap / abs(overlap))
    u = np.outer(u_hi, np.conj(v[:, 0])) + np.outer(u_lo, np.conj(v[:, 1]))
    return PolarFactors(u=u, r=_spectral(v, [smax, smin]))


def residual_norm(m, lam: complex, v) -> float:
    """Euclidean norm of ``m @ v - lam * v`` for a unit vector ``v``."""
    m = as_matrix(m)
    v = as_vector(v)
    if abs(float(np.vdot(v, v).real) - 1) > EQUALITY_TOL:
        raise ValueError("residual_norm expects a normalized vector")
    return float(np.linalg.norm(m @ v - lam * v))
