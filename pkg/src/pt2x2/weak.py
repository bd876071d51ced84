"""
Weak-value measurement of the 4-parameter model via its polar factors, and
the real-symmetric surrogate that shares its spectrum.

Writing ``H = U R`` with ``U`` unitary and ``R = sqrt(H^H H)`` gives, for a
pre-selected state ``psi`` and post-selected state ``phi = U^H psi``::

    <psi|H|psi> = <phi|R|psi> = (<phi|R|psi> / <phi|psi>) * <phi|psi>

i.e. the expectation of the non-Hermitian ``H`` is a weak value of the
Hermitian ``R`` times an overlap. For ``H4`` the positive factor has one of
two explicit forms depending on whether ``r > s`` or ``r < s``; both have
spectra ``r + s, |r - s|`` that differ from the eigenvalues of ``H4``.
The surrogate ``[[r cos(theta), s cos(alpha)], [s cos(alpha), r cos(theta)]]``
reproduces those eigenvalues for every unbroken parameter point.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import BrokenPhase, OrthogonalPostSelection
from .linalg2 import EQUALITY_TOL, PolarFactors, as_matrix, as_vector, dagger, eigen2, fnorm, polar
from .models import Params4, PhaseKind, alpha_of, build_h4, classify, spectrum_h5


class Regime(str, enum.Enum):
    R_GREATER = "RGreater"
    S_GREATER = "SGreater"
    BOUNDARY = "Boundary"


@dataclass(frozen=True, eq=False)
class RegimeOperator:
    matrix: np.ndarray
    regime: Regime
    eigs: tuple[float, float]


@dataclass(frozen=True, eq=False)
class EquivalentH:
    matrix: np.ndarray
    lambda_plus: float
    lambda_minus: float


@dataclass(frozen=True, eq=False)
class WeakValueRecord:
    psi: np.ndarray
    phi: np.ndarray
    weak_value: complex
    overlap: complex
    reconstructed: complex
    direct: complex

    @property
    def error(self) -> float:
        return abs(self.reconstructed - self.direct)


def _hermitian_pair(diag: float, off: float, theta: float) -> np.ndarray:
    phase = cmath.exp(1j * theta)
    return np.array([[diag, off * phase.conjugate()], [off * phase, diag]], dtype=complex)


def regime_operator(p: Params4) -> RegimeOperator:
    """Positive polar factor of ``H4`` in closed form.

    ``[[r, s e^{-i theta}], [s e^{i theta}, r]]`` when ``r > s`` and
    ``[[s, r e^{-i theta}], [r e^{i theta}, s]]`` when ``r < s``. Within
    ``1e-12 (r + s)`` of ``r == s`` the first form is returned, labelled
    ``Boundary``, with eigenvalues ``(r + s, 0)``.
    """
    r, s = p.r, p.s
    if abs(r - s) <= EQUALITY_TOL * (r + s):
        return RegimeOperator(_hermitian_pair(r, s, p.theta), Regime.BOUNDARY, (r + s, 0.0))
    if r > s:
        return RegimeOperator(_hermitian_pair(r, s, p.theta), Regime.R_GREATER, (r + s, r - s))
    return RegimeOperator(_hermitian_pair(s, r, p.theta), Regime.S_GREATER, (s + r, s - r))


def completed_polar(h) -> PolarFactors:
    """Polar decomposition that also covers a singular positive factor.

    When ``R`` is singular (``r == s`` for ``H4``), ``U`` is completed on the
    null space of ``R`` with the eigenbasis of ``h^H h``; ``U R = h`` and
    ``U^H U = I`` still hold.
    """
    return polar(h, allow_singular=True)


def verify_polar_identity(p: Params4) -> float:
    """``|sqrt(H4^H H4) - R_regime|_F``; vanishes when the closed forms are right.

    Raises
    ------
    SingularFactor
        At ``r == s``.
    """
    return fnorm(polar(build_h4(p)).r - regime_operator(p).matrix)


def weak_expectation(h, psi, *, allow_singular: bool = False) -> WeakValueRecord:
    """Recover ``<psi|h|psi>`` from a weak value of the polar factor ``R``.

    Any 2x2 ``h`` is accepted, so this works for an arbitrary observable and
    not only for the model Hamiltonian. With ``allow_singular`` the
    completed polar decomposition is used when ``R`` is singular.

    Raises
    ------
    SingularFactor
        If ``R`` is singular and ``allow_singular`` is false.
    OrthogonalPostSelection
        If ``|<phi|psi>| <= 1e-12``.
    """
    h = as_matrix(h)
    psi = as_vector(psi)
    if abs(float(np.vdot(psi, psi).real) - 1) > EQUALITY_TOL:
        raise ValueError("psi must be normalized")
    factors = completed_polar(h) if allow_singular else polar(h)
    phi = dagger(factors.u) @ psi
    overlap = complex(np.vdot(phi, psi))
    if abs(overlap) <= EQUALITY_TOL:
        raise OrthogonalPostSelection(f"|<phi|psi>| = {abs(overlap):.3e}")
    weak_value = complex(np.vdot(phi, factors.r @ psi)) / overlap
    direct = complex(np.vdot(psi, h @ psi))
    return WeakValueRecord(psi, phi, weak_value, overlap, weak_value * overlap, direct)


def equivalent_h(p: Params4) -> EquivalentH:
    """Real-symmetric operator isospectral to ``H4`` in the unbroken phase.

    Raises
    ------
    BrokenPhase, ExceptionalPoint
        From :func:`pt2x2.models.alpha_of`.
    """
    a = alpha_of(p)
    diag = p.r * math.cos(p.theta)
    off = p.s * a.cos_alpha
    matrix = np.array([[diag, off], [off, diag]], dtype=complex)
    return EquivalentH(matrix, diag + off, diag - off)


def _descending(values) -> list[complex]:
    return sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag), reverse=True)


def isospectral_gap(p: Params4) -> float:
    """Largest distance between the surrogate's and ``H4``'s eigenvalues.

    ``H4``'s spectrum comes from the numerical eigensolver, not the closed
    form, so this is an independent check.
    """
    eq = equivalent_h(p)
    beta = _descending(eigen2(build_h4(p)).eigenvalues)
    lam = (eq.lambda_plus, eq.lambda_minus)
    return max(abs(lam[k] - beta[k]) for k in range(2))


def regime_spectral_discrepancy(p: Params4) -> tuple[float, float]:
    """``(|r_+ - beta_+|, |r_- - beta_-|)`` for the regime operator's eigenvalues.

    At the ``r == s`` boundary the operator's eigenvalues ``(2r, 0)`` are used.
    """
    if classify(p).kind is PhaseKind.BROKEN:
        raise BrokenPhase(f"no real spectrum to compare for {p}")
    eigs = regime_operator(p).eigs
    beta = _descending(spectrum_h5(p))
    return abs(eigs[0] - beta[0]), abs(eigs[1] - beta[1])


def equiv_expectation(p: Params4, which: str) -> float:
    """``<Phi|h|Phi>`` for the surrogate eigenvectors ``Phi = (1, +-1)/sqrt(2)``."""
    if which not in ("plus", "minus"):
        raise ValueError(f"which must be 'plus' or 'minus', got {which!r}")
    h = equivalent_h(p).matrix
    sign = 1.0 if which == "plus" else -1.0
    phi = np.array([1.0, sign]) / math.sqrt(2)
    return float(np.vdot(phi, h @ phi).real)
