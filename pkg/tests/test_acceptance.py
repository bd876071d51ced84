"""
Acceptance suite: one test per criterion, each recording a single PASS/FAIL
line that is printed in the pytest terminal summary.

Run on its own with ``python3 tests/test_acceptance.py`` or
``pytest tests/test_acceptance.py -v``. Sampling uses the fixed seed in
``conftest.SEED`` so results are reproducible.
"""

import csv
import io
import math
import subprocess
import sys

import numpy as np

from conftest import ACCEPTANCE_LINES, R_DOMAIN, S_DOMAIN, SEED, THETA_DOMAIN, random_unit_vector, sample_params4, sample_params5
from pt2x2.cli import EXIT_USAGE, main
from pt2x2.exceptions import OrthogonalPostSelection
from pt2x2.linalg2 import dagger, eigen2, fnorm, sqrt_psd
from pt2x2.models import (
    Params4,
    Params5,
    PhaseKind,
    alpha_of,
    build_h4,
    build_h5,
    classify,
    eigen_residuals,
    pt_commutes,
    spectrum_h5,
)
from pt2x2.report import SweepSpec, point_fields
from pt2x2.weak import (
    Regime,
    isospectral_gap,
    regime_operator,
    regime_spectral_discrepancy,
    verify_polar_identity,
    weak_expectation,
)

GRID_STEPS = 25


def record(n: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def grid4():
    axes = [np.linspace(*R_DOMAIN, GRID_STEPS), np.linspace(*S_DOMAIN, GRID_STEPS), np.linspace(*THETA_DOMAIN, GRID_STEPS)]
    for r in axes[0]:
        for s in axes[1]:
            for theta in axes[2]:
                p = Params4(float(r), float(s), float(theta))
                if classify(p).kind is PhaseKind.UNBROKEN:
                    yield p


def unordered_distance(a, b):
    return min(max(abs(a[0] - b[0]), abs(a[1] - b[1])), max(abs(a[0] - b[1]), abs(a[1] - b[0])))


def test_criterion_1_equal_off_diagonals_restore_eigenpairs():
    worst, n, bad = 0.0, 0, 0
    for p in grid4():
        rep = eigen_residuals(p)
        ratio = max(rep.residual_plus, rep.residual_minus) / (1 + fnorm(build_h4(p)))
        worst = max(worst, ratio)
        bad += ratio > 1e-12
        n += 1
    ok = bad == 0
    record(1, ok, f"{n} unbroken grid points, worst residual/(1+|H|) = {worst:.3e} (tol 1e-12), {bad} over")
    assert ok


def test_criterion_2_unequal_off_diagonals_leave_defect():
    rng = np.random.default_rng(SEED + 2)
    pts = sample_params5(
        rng,
        1000,
        unbroken=True,
        accept=lambda p: abs(p.s - p.t) >= 0.1 and abs(p.r * math.sin(p.theta)) >= 0.1,
    )
    min_sum, worst_im = math.inf, 0.0
    for p in pts:
        rep = eigen_residuals(p)
        min_sum = min(min_sum, rep.residual_plus + rep.residual_minus)
        a = alpha_of(p)
        x = p.r * math.sin(p.theta)
        expected = (x - p.t * a.sin_alpha, -(x - p.s * a.sin_alpha))
        for k in range(4):
            worst_im = max(worst_im, abs(rep.row_defects[k].imag - expected[k % 2]))
    ok = min_sum > 1e-3 and worst_im <= 1e-12
    record(2, ok, f"min residual sum = {min_sum:.3e} (> 1e-3), worst imaginary-defect mismatch = {worst_im:.3e} (tol 1e-12)")
    assert ok


def test_criterion_3_closed_form_spectrum_matches_eigensolver():
    rng = np.random.default_rng(SEED + 3)
    worst, kinds = 0.0, {k: 0 for k in PhaseKind}
    for _ in range(10_000):
        p = Params5(rng.uniform(*R_DOMAIN), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-math.pi, math.pi))
        kinds[classify(p).kind] += 1
        worst = max(worst, unordered_distance(spectrum_h5(p), eigen2(build_h5(p)).eigenvalues))
    ok = worst <= 1e-10 and kinds[PhaseKind.BROKEN] > 0 and kinds[PhaseKind.UNBROKEN] > 0
    record(
        3,
        ok,
        f"10000 points ({kinds[PhaseKind.UNBROKEN]} unbroken, {kinds[PhaseKind.BROKEN]} broken), "
        f"worst distance = {worst:.3e} (tol 1e-10)",
    )
    assert ok


def test_criterion_4_regime_operator_is_positive_polar_factor():
    rng = np.random.default_rng(SEED + 4)
    pts = sample_params4(rng, 1000, unbroken=True, accept=lambda p: abs(p.r - p.s) > 1e-3)
    worst, wrong_regime = 0.0, 0
    for p in pts:
        h = build_h4(p)
        # two routes to sqrt(H^H H): the polar factor and the spectral square root
        direct = fnorm(sqrt_psd(dagger(h) @ h) - regime_operator(p).matrix)
        worst = max(worst, verify_polar_identity(p) / (1 + p.r + p.s), direct / (1 + p.r + p.s))
        wrong_regime += (regime_operator(p).regime is Regime.R_GREATER) != (p.r > p.s)
    ok = worst <= 1e-10 and wrong_regime == 0
    record(4, ok, f"1000 points, worst |sqrt(H^H H) - R|/(1+r+s) = {worst:.3e} (tol 1e-10), {wrong_regime} wrong regime")
    assert ok


def test_criterion_5_weak_value_pipeline_reproduces_expectation():
    rng = np.random.default_rng(SEED + 5)
    worst, n = 0.0, 0
    while n < 1000:
        p = sample_params4(rng, 1, accept=lambda p: abs(p.r - p.s) > 1e-12 * (p.r + p.s))[0]
        psi = random_unit_vector(rng)
        try:
            rec = weak_expectation(build_h4(p), psi)
        except OrthogonalPostSelection:
            continue
        if abs(rec.overlap) <= 1e-6:
            continue
        worst = max(worst, rec.error / (1 + abs(rec.direct)))
        n += 1
    ok = worst <= 1e-10
    record(5, ok, f"1000 (H, psi) pairs, worst |reconstructed - direct|/(1+|direct|) = {worst:.3e} (tol 1e-10)")
    assert ok


def test_criterion_6_surrogate_is_isospectral():
    worst, n, regimes = 0.0, 0, set()
    for p in grid4():
        worst = max(worst, isospectral_gap(p))
        regimes.add("r>s" if p.r > p.s else "r<s" if p.r < p.s else "r=s")
        n += 1
    ok = worst <= 1e-10 and {"r>s", "r<s"} <= regimes
    record(6, ok, f"{n} unbroken grid points covering {sorted(regimes)}, worst gap = {worst:.3e} (tol 1e-10)")
    assert ok


def test_criterion_7_regime_operator_spectrum_differs():
    rng = np.random.default_rng(SEED + 7)
    pts = sample_params4(
        rng,
        1000,
        unbroken=True,
        accept=lambda p: abs(math.sin(p.theta)) >= 0.1 and abs(p.r - p.s) >= 0.1,
    )
    gaps = np.array([regime_spectral_discrepancy(p) for p in pts])
    small = int(np.sum(np.min(gaps, axis=1) <= 1e-3))
    zero_pts = sample_params4(rng, 1000, accept=lambda p: abs(p.r - p.s) >= 0.1)
    zero_gaps = np.array([regime_spectral_discrepancy(Params4(p.r, p.s, 0.0)) for p in zero_pts])
    nonzero = int(np.sum(np.max(zero_gaps, axis=1) > 1e-12))
    ok = small == 0 and nonzero == 0
    record(
        7,
        ok,
        f"off-axis: min component = {gaps.min():.3e} (> 1e-3), {small}/1000 at or below; "
        f"theta = 0: max component = {zero_gaps.max():.3e} (<= 1e-12), {nonzero}/1000 above",
    )
    assert ok


def test_criterion_8_builders_are_pt_symmetric():
    rng = np.random.default_rng(SEED + 8)
    worst4 = max(pt_commutes(build_h4(p)) for p in sample_params4(rng, 500))
    worst5 = max(pt_commutes(build_h5(p)) for p in sample_params5(rng, 500))
    ok = max(worst4, worst5) <= 1e-12
    record(8, ok, f"1000 matrices, worst witness: equal off-diagonals {worst4:.3e}, unequal {worst5:.3e} (tol 1e-12)")
    assert ok


SWEEP_ARGS = [
    "sweep",
    "--model", "h4",
    "--r-range", "0", "2", "12",
    "--s-range", "0.1", "2", "12",
    "--theta-range", "0", "3.141592653589793", "12",
]
MALFORMED = [
    ["verify", "-r", "abc", "-s", "1", "--theta", "0"],
    ["sweep", "--r-range", "1", "0", "5", "--s-range", "0.5", "1", "2", "--theta-range", "0", "1", "2", "--out", "-"],
    ["verify", "--model", "h5", "-r", "1", "-s", "2", "--theta", "0.3"],
]


def test_criterion_9_cli_determinism_and_round_trip(tmp_path):
    outputs = []
    for k in range(2):
        path = tmp_path / f"run{k}.csv"
        assert main(SWEEP_ARGS + ["--out", str(path)]) == 0
        outputs.append(path.read_bytes())
    proc = subprocess.run(
        [sys.executable, "-m", "pt2x2", *SWEEP_ARGS, "--out", "-"], capture_output=True, check=False
    )
    outputs.append(proc.stdout)
    identical = proc.returncode == 0 and len(set(outputs)) == 1

    spec = SweepSpec((0, 2, 12), (0.1, 2, 12), (0, math.pi, 12))
    points = list(spec.points())
    rows = list(csv.DictReader(io.StringIO(outputs[0].decode("utf-8"))))
    rng = np.random.default_rng(SEED + 9)
    mismatched = 0
    for k in rng.choice(len(rows), 100, replace=False):
        fields = point_fields(points[k])
        for col, text in rows[k].items():
            value = fields[col]
            if isinstance(value, float):
                mismatched += abs(float(text) - value) > np.spacing(abs(value))
            else:
                mismatched += text != ("" if value is None else value)

    codes = [main(argv, out=io.StringIO()) for argv in MALFORMED]
    ok = identical and len(rows) == len(points) and mismatched == 0 and codes == [EXIT_USAGE] * 3
    record(
        9,
        ok,
        f"3 sweep runs byte-identical: {identical}; 100 re-verified rows, {mismatched} mismatched values; "
        f"malformed-input exit codes {codes}",
    )
    assert ok


if __name__ == "__main__":
    import pytest

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
