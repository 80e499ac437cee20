"""Exception types shared across the engine."""

from __future__ import annotations


class CaekitError(Exception):
    """Base class for all engine errors."""


class GraphStructureError(CaekitError):
    """A case graph violates one or more structural invariants.

    Carries the complete list of findings, not just the first one, so a
    caller can report every violation in one pass.
    """

    def __init__(self, findings):
        self.findings = list(findings)
        lines = "; ".join(f"{f.code}[{f.subject}]: {f.message}" for f in self.findings)
        super().__init__(f"invalid case structure: {lines}")


class UndefinedMeasureError(CaekitError):
    """A confirmation measure is undefined for the given assessment (0/0)."""


class UndefinedPosteriorError(CaekitError):
    """Total evidence probability is zero; the posterior does not exist."""


class PropagationError(CaekitError):
    """Confidence propagation cannot proceed (missing inputs, mode clash)."""


class ImpossibleEvidenceError(CaekitError):
    """Observed network evidence has zero joint probability."""

    def __init__(self, message, suggestion=None):
        super().__init__(message)
        # Optional rebutting-defeater suggestion for the dialectics layer.
        self.suggestion = suggestion


class NetworkSizeError(CaekitError):
    """Network exceeds the configured variable cap for exact enumeration."""


class DefeaterLifecycleError(CaekitError):
    """An illegal defeater status transition was requested."""


class PatternError(CaekitError):
    """Confidence-pattern expansion failed (bad target, duplicate pattern)."""
