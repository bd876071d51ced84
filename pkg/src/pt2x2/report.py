"""
Single-point verification reports and parameter-grid sweeps.

Both are built from the same per-point helpers so a one-point sweep row and a
``verify`` report carry identical numbers.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import OrthogonalPostSelection
from .linalg2 import EQUALITY_TOL, IDENTITY, PREDICATE_TOL, dagger, eigen2, fnorm
from .models import (
    Params4,
    Params5,
    PhaseKind,
    build_h4,
    build_h5,
    classify,
    eigen_residuals,
    spectrum_h5,
)
from .weak import (
    completed_polar,
    isospectral_gap,
    regime_operator,
    regime_spectral_discrepancy,
    weak_expectation,
)

MODELS = ("h4", "h5")

SWEEP_COLUMNS = (
    "r",
    "s",
    "t",
    "theta",
    "discriminant",
    "phase",
    "residual_plus",
    "residual_minus",
    "isospectral_gap",
    "regime_gap_plus",
    "regime_gap_minus",
)

# phase-gated fields carry one of these instead of a number
MARKERS = {PhaseKind.BROKEN: "broken", PhaseKind.EXCEPTIONAL_POINT: "exceptional_point"}

PROBE_STATES = (
    np.array([1, 0], dtype=complex),
    np.array([0, 1], dtype=complex),
    np.array([1, 1], dtype=complex) / math.sqrt(2),
    np.array([1, 1j], dtype=complex) / math.sqrt(2),
)


def make_params(model: str, r: float, s: float, t: float | None, theta: float) -> Params4 | Params5:
    if model == "h4":
        return Params4(r, s, theta)
    if model == "h5":
        if t is None:
            raise ValueError("model h5 needs t")
        return Params5(r, s, t, theta)
    raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")


def build(p: Params4 | Params5) -> np.ndarray:
    return build_h4(p) if isinstance(p, Params4) else build_h5(p)


def complex_json(z: complex):
    z = complex(z)
    return z.real if z.imag == 0 else {"re": z.real, "im": z.imag}


def matrix_json(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def _unordered_distance(a, b) -> float:
    straight = max(abs(a[0] - b[0]), abs(a[1] - b[1]))
    crossed = max(abs(a[0] - b[1]), abs(a[1] - b[0]))
    return float(min(straight, crossed))


def pipeline_error(h: np.ndarray) -> float | None:
    """Worst relative weak-value reconstruction error over fixed probe states.

    Probes whose post-selection is orthogonal are skipped; ``None`` if all are.
    """
    errors = []
    for psi in PROBE_STATES:
        try:
            rec = weak_expectation(h, psi, allow_singular=True)
        except OrthogonalPostSelection:
            continue
        errors.append(rec.error / (1 + abs(rec.direct)))
    return max(errors) if errors else None


@dataclass
class VerifyReport:
    model: str
    params: dict
    phase: dict
    spectrum: list
    spectrum_oracle_error: float
    residuals: dict | str | None
    polar_check: float
    polar_reconstruction: float
    regime: dict | None
    isospectral_gap: float | str | None
    regime_gaps: list | str | None
    pipeline_error: float | None
    contracts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.contracts.values())

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "params": self.params,
            "phase": self.phase,
            "spectrum": self.spectrum,
            "spectrum_oracle_error": self.spectrum_oracle_error,
            "residuals": self.residuals,
            "polar_check": self.polar_check,
            "polar_reconstruction": self.polar_reconstruction,
            "regime": self.regime,
            "isospectral_gap": self.isospectral_gap,
            "regime_gaps": self.regime_gaps,
            "pipeline_error": self.pipeline_error,
            "contracts": self.contracts,
        }


def _params_dict(p) -> dict:
    return {"r": p.r, "s": p.s, "t": p.t, "theta": p.theta}


def point_fields(p: Params4 | Params5) -> dict:
    """Sweep-row values for one parameter point (numbers, markers or None)."""
    phase = classify(p)
    out = {
        "r": p.r,
        "s": p.s,
        "t": p.t,
        "theta": p.theta,
        "discriminant": phase.discriminant,
        "phase": phase.kind.value,
    }
    h4 = isinstance(p, Params4)
    if phase.kind is PhaseKind.UNBROKEN:
        res = eigen_residuals(p)
        out["residual_plus"] = res.residual_plus
        out["residual_minus"] = res.residual_minus
        if h4:
            out["isospectral_gap"] = isospectral_gap(p)
            out["regime_gap_plus"], out["regime_gap_minus"] = regime_spectral_discrepancy(p)
        else:
            out["isospectral_gap"] = out["regime_gap_plus"] = out["regime_gap_minus"] = None
    else:
        marker = MARKERS[phase.kind]
        out["residual_plus"] = out["residual_minus"] = marker
        value = marker if h4 else None
        out["isospectral_gap"] = out["regime_gap_plus"] = out["regime_gap_minus"] = value
    return out


def verify_point(p: Params4 | Params5) -> VerifyReport:
    """Run every applicable check at one parameter point."""
    h4 = isinstance(p, Params4)
    h = build(p)
    h_norm = fnorm(h)
    fields = point_fields(p)
    phase = classify(p)
    unbroken = phase.kind is PhaseKind.UNBROKEN
    contracts = {}

    closed = spectrum_h5(p)
    oracle_err = _unordered_distance(closed, eigen2(h).eigenvalues)
    contracts["spectrum_matches_oracle"] = oracle_err <= PREDICATE_TOL * (1 + h_norm)

    residuals = None
    if not h4:
        if unbroken:
            res = eigen_residuals(p)
            residuals = {
                "residual_plus": res.residual_plus,
                "residual_minus": res.residual_minus,
                "row_defects": [[d.real, d.imag] for d in res.row_defects],
                "s_equals_t": res.s_equals_t,
            }
            if res.s_equals_t:
                worst = max(res.residual_plus, res.residual_minus)
                contracts["residuals_vanish_when_s_equals_t"] = worst <= EQUALITY_TOL * (1 + h_norm)
        else:
            residuals = MARKERS[phase.kind]

    factors = completed_polar(h)
    recon = fnorm(factors.u @ factors.r - h)
    contracts["polar_reconstruction"] = recon <= PREDICATE_TOL * (1 + h_norm)
    contracts["polar_unitary"] = fnorm(dagger(factors.u) @ factors.u - IDENTITY) <= PREDICATE_TOL

    regime = None
    if h4:
        op = regime_operator(p)
        polar_check = fnorm(factors.r - op.matrix)
        contracts["polar_matches_regime_operator"] = polar_check <= PREDICATE_TOL * (1 + p.r + p.s)
        regime = {"regime": op.regime.value, "eigs": list(op.eigs), "matrix": matrix_json(op.matrix)}
    else:
        polar_check = recon

    iso = fields["isospectral_gap"]
    if h4 and unbroken:
        contracts["isospectral"] = iso <= PREDICATE_TOL * (1 + p.r + p.s)
    if h4:
        gaps = [fields["regime_gap_plus"], fields["regime_gap_minus"]] if unbroken else MARKERS[phase.kind]
    else:
        gaps = None

    pipe = pipeline_error(h)
    if pipe is not None:
        contracts["weak_value_pipeline"] = pipe <= PREDICATE_TOL

    return VerifyReport(
        model="h4" if h4 else "h5",
        params=_params_dict(p),
        phase={"kind": phase.kind.value, "discriminant": phase.discriminant},
        spectrum=[complex_json(e) for e in closed],
        spectrum_oracle_error=oracle_err,
        residuals=residuals,
        polar_check=polar_check,
        polar_reconstruction=recon,
        regime=regime,
        isospectral_gap=iso,
        regime_gaps=gaps,
        pipeline_error=pipe,
        contracts=contracts,
    )


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return format_float(value)


@dataclass(frozen=True)
class SweepSpec:
    """Grid definition; each range is ``(min, max, steps)``. ``t_range`` is ignored for h4."""

    r_range: tuple[float, float, int]
    s_range: tuple[float, float, int]
    theta_range: tuple[float, float, int]
    t_range: tuple[float, float, int] | None = None
    model: str = "h4"
    outputs: tuple[str, ...] = SWEEP_COLUMNS

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.model == "h5" and self.t_range is None:
            raise ValueError("model h5 needs a t range")
        for name in ("r_range", "s_range", "t_range", "theta_range"):
            rng = getattr(self, name)
            if rng is None:
                continue
            lo, hi, steps = rng
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise ValueError(f"{name} bounds must be finite")
            if lo > hi:
                raise ValueError(f"{name}: min {lo} > max {hi}")
            if int(steps) != steps or steps < 1:
                raise ValueError(f"{name}: steps must be a positive integer, got {steps}")
        unknown = [c for c in self.outputs if c not in SWEEP_COLUMNS]
        if unknown or not self.outputs:
            raise ValueError(f"unknown output columns {unknown}; choose from {SWEEP_COLUMNS}")

    @staticmethod
    def _axis(rng) -> np.ndarray:
        lo, hi, steps = rng
        return np.linspace(lo, hi, int(steps))

    def points(self):
        """Parameter points in row-major order over r, s, t, theta."""
        if self.model == "h4":
            for r, s, theta in itertools.product(
                self._axis(self.r_range), self._axis(self.s_range), self._axis(self.theta_range)
            ):
                yield Params4(float(r), float(s), float(theta))
        else:
            for r, s, t, theta in itertools.product(
                self._axis(self.r_range),
                self._axis(self.s_range),
                self._axis(self.t_range),
                self._axis(self.theta_range),
            ):
                yield Params5(float(r), float(s), float(t), float(theta))


def write_sweep(spec: SweepSpec, out) -> int:
    """Write the sweep as CSV to a path or text stream; returns the row count.

    Points are validated before anything is written.
    """
    points = list(spec.points())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(spec.outputs)
    for p in points:
        fields = point_fields(p)
        writer.writerow([_cell(fields[c]) for c in spec.outputs])
    text = buf.getvalue()
    if hasattr(out, "write"):
        out.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return len(points)
