"""Shared exception types."""


class VerificationError(RuntimeError):
    """An internal cross-check failed: two independent computations disagree,
    or a structural invariant that must hold mathematically was violated.

    This is never a usage error; it signals either a bug or a genuinely
    false claim, and it always carries the counterexample in its message.
    """
