"""Failure types shared across the package."""


class AccuracyError(RuntimeError):
    """A numerical route failed its own accuracy check (tail bound, branch
    disagreement, truncation not reached)."""


class EnvelopeViolation(RuntimeError):
    """A rejection-sampling density exceeded its certified envelope.

    This is a hard failure: it means the cached tables are corrupt or the
    envelope certification was bypassed.
    """
