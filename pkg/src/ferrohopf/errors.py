"""Exception types shared across the toolkit.

The CLI maps these onto distinct exit codes, so keep the split between
"the input was bad" (InvalidLawError, ValueError), "a solver failed"
(NumericalError and subclasses) and "the search legitimately found
nothing" (HomoclinicNotFound).
"""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all toolkit-specific errors."""


class InvalidLawError(ToolkitError):
    """Magnetisation law rejected at construction."""


class NumericalError(ToolkitError):
    """A solver or quadrature failed to reach its tolerance."""


class SingularParameterError(NumericalError):
    """A closed-form expression hit a (near-)vanishing denominator.

    Carries the name of the offending term so sweeps can record it.
    """

    def __init__(self, term: str, detail: str = ""):
        self.term = term
        msg = f"singular denominator in term '{term}'"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class RootIsolationError(NumericalError):
    """Bracketing scan could not isolate the requested roots."""


class BlowUpError(NumericalError):
    """Trajectory norm exceeded the blow-up bound; partial data attached."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class HomoclinicNotFound(ToolkitError):
    """Orbit search exhausted its budget without an orbit.

    Distinct from NumericalError: a clean "not found" is a meaningful
    outcome for the multipulse search, not a solver failure.
    """
