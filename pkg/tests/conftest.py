import math

import numpy as np
import pytest

from pt2x2.models import Params4, Params5, PhaseKind, classify

SEED = 20261015

# acceptance domain for the 4-parameter model
R_DOMAIN = (0.0, 2.0)
S_DOMAIN = (0.1, 2.0)
THETA_DOMAIN = (0.0, math.pi)

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def random_complex_matrix(rng, scale=1.0):
    return scale * (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))


def random_unit_vector(rng):
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return v / np.linalg.norm(v)


def sample_params4(rng, n, accept=lambda p: True, unbroken=False):
    out = []
    while len(out) < n:
        p = Params4(rng.uniform(*R_DOMAIN), rng.uniform(*S_DOMAIN), rng.uniform(*THETA_DOMAIN))
        if unbroken and classify(p).kind is not PhaseKind.UNBROKEN:
            continue
        if accept(p):
            out.append(p)
    return out


def sample_params5(rng, n, accept=lambda p: True, unbroken=False, st_domain=S_DOMAIN, theta_domain=THETA_DOMAIN):
    out = []
    while len(out) < n:
        p = Params5(
            rng.uniform(*R_DOMAIN),
            rng.uniform(*st_domain),
            rng.uniform(*st_domain),
            rng.uniform(*theta_domain),
        )
        if unbroken and classify(p).kind is not PhaseKind.UNBROKEN:
            continue
        if accept(p):
            out.append(p)
    return out


def unordered_close(a, b):
    straight = max(abs(a[0] - b[0]), abs(a[1] - b[1]))
    crossed = max(abs(a[0] - b[1]), abs(a[1] - b[0]))
    return min(straight, crossed)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
