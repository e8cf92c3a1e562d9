from __future__ import annotations


class InvariantViolation(RuntimeError):
    """An internal consistency check failed.

    Raised (never ``assert``-ed, so ``python -O`` keeps the checks) when a
    computed quantity contradicts a structural guarantee: an empty interval
    intersection, a non-integer endpoint, a non-alternating extremum sequence
    or a sum that is not divisible by 2d-2.  Any occurrence is a bug.
    """
