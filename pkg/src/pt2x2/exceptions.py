"""Exception types raised by pt2x2."""


class PT2x2Error(ValueError):
    """Base class for all pt2x2 errors."""


class NonFinite(PT2x2Error):
    pass


class NotHermitian(PT2x2Error):
    pass


class NegativeEigenvalue(PT2x2Error):
    pass


class SingularFactor(PT2x2Error):
    """The positive polar factor is numerically singular, so U = H R^-1 is undefined."""


class BrokenPhase(PT2x2Error):
    """Parameters lie in the PT-broken region (complex-conjugate spectrum)."""


class ExceptionalPoint(PT2x2Error):
    """Parameters sit on the exceptional-point boundary, where cos(alpha) = 0."""


class OrthogonalPostSelection(PT2x2Error):
    """Pre- and post-selected states are orthogonal; the weak value is undefined."""
