"""Shared exception types."""


class ValidationError(ValueError):
    """Malformed input: not a permutation, not a Dyck path, bad shape."""


class ConstraintError(ValueError):
    """Structurally valid input violating a height/label bound."""


class GuardLimitError(RuntimeError):
    """Exhaustive sweep requested beyond the desk-scale ceiling.

    Iterating all permutations of more than GUARD_MAX_N items is refused
    unless the caller passes force=True.
    """


GUARD_MAX_N = 10
