"""Failure modes that carry mathematical meaning.

Ordinary misuse (wrong types, negative exponents and so on) raises
ValueError.  The classes below are reserved for situations where an
exactness claim fails: a division that was promised to be exact is not,
a polynomial that should be a perfect power is not, and so on.  Callers
are expected to let these propagate; they are evidence, not noise.
"""
from __future__ import annotations


class DivisionNotExact(ArithmeticError):
    """An exact polynomial or integer division left a remainder."""


class NotPerfectPower(ArithmeticError):
    """A polynomial expected to be an n-th power is not one."""


class BoundTooSmall(ArithmeticError):
    """An interpolation degree bound failed its verification point."""


class NotInSubring(ArithmeticError):
    """A polynomial does not lie in the claimed rescaled subring."""


class ZeroPolynomial(ArithmeticError):
    """The zero polynomial was passed where it has no meaning."""


class GuardrailExceeded(RuntimeError):
    """A requested computation is above the configured size guardrail.

    Raised instead of silently grinding on inputs whose dynatomic degree
    is larger than the default cap.  The caller can re-run with the cap
    lifted explicitly.
    """
