"""
pt2x2: numerical checks for 2x2 PT-symmetric matrix models.

Modules
-------
linalg2  closed-form complex 2x2 eigensolver, PSD square root, polar decomposition
models   the H5 / H4 families, phase classification, candidate-eigenpair defects
weak     polar-factor weak values, regime operators, isospectral surrogate
report   verify reports and CSV sweeps (used by the ``pt2x2`` command)
"""

from importlib import resources

from .exceptions import (
    BrokenPhase,
    ExceptionalPoint,
    NegativeEigenvalue,
    NonFinite,
    NotHermitian,
    OrthogonalPostSelection,
    PT2x2Error,
    SingularFactor,
)
from .linalg2 import (
    EigenSystem2,
    PolarFactors,
    eigen2,
    eigh2,
    is_hermitian,
    is_unitary,
    polar,
    residual_norm,
    sqrt_psd,
)
from .models import (
    AlphaAngle,
    Params4,
    Params5,
    PhaseClass,
    PhaseKind,
    ResidualReport,
    alpha_of,
    build_h4,
    build_h5,
    candidate_vectors,
    classify,
    eigen_residuals,
    pt_commutes,
    spectrum_h5,
)
from .weak import (
    EquivalentH,
    Regime,
    RegimeOperator,
    WeakValueRecord,
    completed_polar,
    equiv_expectation,
    equivalent_h,
    isospectral_gap,
    regime_operator,
    regime_spectral_discrepancy,
    verify_polar_identity,
    weak_expectation,
)

__version__ = "0.1.0"


def verify_report_schema() -> dict:
    """JSON schema describing ``pt2x2 verify --format json`` output."""
    import json

    return json.loads(resources.files(__name__).joinpath("schemas/verify_report.schema.json").read_text())
