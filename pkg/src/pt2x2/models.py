"""
PT-symmetric 2x2 model families and the eigenpair-defect analysis.

Two families are covered::

    H5 = [[r e^{i theta}, t], [s, r e^{-i theta}]]      (r, s, t, theta)
    H4 = [[r e^{i theta}, s], [s, r e^{-i theta}]]      (r, s, theta), i.e. t = s

Both have eigenvalues ``r cos(theta) +- sqrt(s t - r^2 sin^2(theta))``. In
the unbroken region the closed-form candidate eigenvectors are built from an
angle ``alpha`` with ``sqrt(s t) sin(alpha) = r sin(theta)``. Those vectors
are exact eigenvectors only when ``s == t``; :func:`eigen_residuals`
measures how far off they are otherwise.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import BrokenPhase, ExceptionalPoint
from .linalg2 import EQUALITY_TOL, as_matrix, fnorm, residual_norm

EXCHANGE = np.array([[0, 1], [1, 0]], dtype=complex)


def _check_finite(**values):
    for name, value in values.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class Params5:
    r: float
    s: float
    t: float
    theta: float

    def __post_init__(self):
        _check_finite(r=self.r, s=self.s, t=self.t, theta=self.theta)
        if self.r < 0:
            raise ValueError(f"r must be non-negative, got {self.r!r}")


@dataclass(frozen=True)
class Params4:
    r: float
    s: float
    theta: float

    def __post_init__(self):
        _check_finite(r=self.r, s=self.s, theta=self.theta)
        if self.r < 0:
            raise ValueError(f"r must be non-negative, got {self.r!r}")
        if not self.s > 0:
            raise ValueError(f"s must be positive, got {self.s!r}")

    @property
    def t(self) -> float:
        return self.s

    def as_params5(self) -> Params5:
        return Params5(self.r, self.s, self.s, self.theta)


def as_params5(p: Params5 | Params4) -> Params5:
    return p.as_params5() if isinstance(p, Params4) else p


@dataclass(frozen=True)
class AlphaAngle:
    alpha: float
    cos_alpha: float
    sin_alpha: float


class PhaseKind(str, enum.Enum):
    UNBROKEN = "Unbroken"
    EXCEPTIONAL_POINT = "ExceptionalPoint"
    BROKEN = "Broken"


@dataclass(frozen=True)
class PhaseClass:
    kind: PhaseKind
    discriminant: float


@dataclass(frozen=True)
class ResidualReport:
    """Defect of the candidate eigenpairs.

    ``row_defects`` is ``(plus_row1, plus_row2, minus_row1, minus_row2)``
    where each entry is ``(H v)_k / v_k - eps``, so a true eigenpair has all
    four equal to zero.
    """

    residual_plus: float
    residual_minus: float
    row_defects: tuple[complex, complex, complex, complex]
    s_equals_t: bool


def build_h5(p: Params5) -> np.ndarray:
    phase = cmath.exp(1j * p.theta)
    return np.array([[p.r * phase, p.t], [p.s, p.r * phase.conjugate()]], dtype=complex)


def build_h4(p: Params4) -> np.ndarray:
    return build_h5(p.as_params5())


def _sqrt_st(p: Params5) -> float:
    if p.s == p.t:
        return abs(p.s)
    return math.sqrt(p.s * p.t)


def discriminant(p: Params5 | Params4) -> float:
    """``s t - r^2 sin^2(theta)``; positive in the unbroken phase."""
    p = as_params5(p)
    x = p.r * math.sin(p.theta)
    st = p.s * p.t
    if st > 0:
        root = _sqrt_st(p)
        return (root - x) * (root + x)
    return st - x * x


def classify(p: Params5 | Params4) -> PhaseClass:
    q = as_params5(p)
    disc = discriminant(q)
    band = EQUALITY_TOL * (1 + q.r * q.r + abs(q.s * q.t))
    if abs(disc) <= band:
        kind = PhaseKind.EXCEPTIONAL_POINT
    elif disc > 0:
        kind = PhaseKind.UNBROKEN
    else:
        kind = PhaseKind.BROKEN
    return PhaseClass(kind, disc)


def alpha_of(p: Params5 | Params4) -> AlphaAngle:
    """Principal-branch angle with ``sqrt(s t) sin(alpha) = r sin(theta)``.

    ``cos(alpha)`` is kept strictly positive, as required by the
    ``1/sqrt(2 cos(alpha))`` normalisation of the candidate vectors.

    Raises
    ------
    BrokenPhase
        If ``|r sin(theta)| > sqrt(s t)`` (this includes ``s t <= 0``).
    ExceptionalPoint
        On the boundary, where ``cos(alpha)`` vanishes.
    """
    q = as_params5(p)
    phase = classify(q)
    if phase.kind is PhaseKind.BROKEN:
        raise BrokenPhase(f"discriminant {phase.discriminant:.6g} < 0 for {q}")
    if phase.kind is PhaseKind.EXCEPTIONAL_POINT:
        raise ExceptionalPoint(f"discriminant {phase.discriminant:.3e} ~ 0 for {q}")
    root = _sqrt_st(q)
    sin_alpha = q.r * math.sin(q.theta) / root
    cos_alpha = math.sqrt(phase.discriminant) / root
    return AlphaAngle(math.atan2(sin_alpha, cos_alpha), cos_alpha, sin_alpha)


def spectrum_h5(p: Params5 | Params4) -> tuple[complex, complex]:
    """Closed-form eigenvalues ``(eps_plus, eps_minus)``.

    Real in the unbroken phase; ``r cos(theta) +- i sqrt(r^2 sin^2(theta) - s t)``
    in the broken phase.
    """
    q = as_params5(p)
    centre = q.r * math.cos(q.theta)
    disc = discriminant(q)
    if disc >= 0:
        split = complex(math.sqrt(disc))
    else:
        split = 1j * math.sqrt(-disc)
    return centre + split, centre - split


def candidate_vectors(a: AlphaAngle) -> tuple[np.ndarray, np.ndarray]:
    """Candidate eigenvectors, evaluated verbatim without correction.

    ``v+ = (e^{i alpha/2}, e^{-i alpha/2}) / sqrt(2 cos(alpha))`` and
    ``v- = (e^{-i alpha/2}, -e^{i alpha/2}) / sqrt(2 cos(alpha))``.
    Their squared 2-norm is ``1/cos(alpha)``, not one.
    """
    if not a.cos_alpha > 0:
        raise ValueError("candidate vectors need cos(alpha) > 0")
    norm = math.sqrt(2 * a.cos_alpha)
    half = cmath.exp(0.5j * a.alpha)
    v_plus = np.array([half, half.conjugate()]) / norm
    v_minus = np.array([half.conjugate(), -half]) / norm
    return v_plus, v_minus


def eigen_residuals(p: Params5 | Params4) -> ResidualReport:
    """Test the candidate pairs ``(eps+, v+)`` and ``(eps-, v-)`` against H5.

    Residual norms are taken on the unit-normalised candidate vectors, so
    they are comparable across parameter points.
    """
    q = as_params5(p)
    a = alpha_of(q)
    h = build_h5(q)
    eps_plus, eps_minus = (e.real for e in spectrum_h5(q))
    v_plus, v_minus = candidate_vectors(a)

    defects = []
    residuals = []
    for eps, v in ((eps_plus, v_plus), (eps_minus, v_minus)):
        hv = h @ v
        defects.extend(complex(hv[k] / v[k] - eps) for k in range(2))
        residuals.append(residual_norm(h, eps, v / np.linalg.norm(v)))

    same = abs(q.s - q.t) <= EQUALITY_TOL * (1 + abs(q.s) + abs(q.t))
    return ResidualReport(residuals[0], residuals[1], tuple(defects), same)


def pt_commutes(m) -> float:
    """PT-symmetry witness ``|P conj(m) P - m|_F`` with P the exchange matrix."""
    m = as_matrix(m)
    return fnorm(EXCHANGE @ np.conj(m) @ EXCHANGE - m)
