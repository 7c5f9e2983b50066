"""Exception types raised across the package.

Two broad classes: InputError covers everything a caller can fix by changing
the input (bad shapes, non-finite data, states outside a routine's domain);
ComputationError covers failures of the numerics themselves (non-convergence,
cross-check disagreement).  The CLI maps InputError to exit code 2 and
ComputationError to exit code 3.
"""


class SpecnormError(Exception):
    """Base class for all package-specific errors."""


class InputError(SpecnormError):
    """Caller-fixable problem with the input."""


class ComputationError(SpecnormError):
    """The computation could not certify its own result."""


# -- input validation ---------------------------------------------------------

class WrongLength(InputError):
    """Coefficient vector length does not match d+1."""


class NonFinite(InputError):
    """Input contains NaN or infinity."""


class DegreeTooSmall(InputError):
    """d < 2 is outside the supported range."""


class ZeroState(InputError):
    """All coefficients vanish; norms and witnesses are undefined."""


class NotUnitary(InputError):
    """Matrix fails the unitarity check."""


class NotAState(InputError):
    """Hilbert-Schmidt norm is not 1 within tolerance."""


class NotReal(InputError):
    """A real-field routine was given a state with nonzero imaginary parts."""


class BadIndex(InputError):
    """Occupation index does not describe a valid basis state."""


class WrongKind(InputError):
    """Classification record has the wrong kind for this routine."""


class ZeroPolynomial(InputError):
    """The zero polynomial has no roots / no resultant."""


class UnknownTarget(InputError):
    """Unrecognized reproduction target name."""


# -- computation integrity ----------------------------------------------------

class DidNotConverge(ComputationError):
    """Root finder failed to reach the requested residual."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class InternalInconsistency(ComputationError):
    """Two independent evaluation routes disagree beyond tolerance."""


class ExceptionalFamily(ComputationError):
    """The fixed-point polynomial vanishes identically; the generic root
    pipeline does not apply and the closed-form/bracket paths must be used."""


class ClassificationFailure(ComputationError):
    """State is exceptional but matches none of the known families."""


class BracketNotReached(ComputationError):
    """Perturbation schedule underflowed before the engine accepted."""


class QVanishes(InputError):
    """Witness construction needs q(z) != 0 at a finite root."""


class SdVanishes(InputError):
    """Witness at infinity needs a nonzero top coefficient."""
