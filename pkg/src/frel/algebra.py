"""Scalar kernels on the unit interval [0, 1].

T-norms and their residual implicators, clamped shifts, and the closed-form
least-shift kernels behind the Chebyshev distance formulas.  Everything here
is a pure function of plain floats.
"""

from __future__ import annotations

from enum import Enum

#: Band tolerated around [0, 1] before an input value is rejected.
UNIT_SLACK = 1e-9


class DomainError(ValueError):
    """A value lies outside [0, 1] beyond ``UNIT_SLACK``."""


class TNorm(Enum):
    """Selects the t-norm and, with it, the residual implicator used everywhere."""

    MINIMUM = "minimum"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"


def as_unit(value: float) -> float:
    """Validate ``value`` into [0, 1].

    Values within ``UNIT_SLACK`` of the interval (round-trip noise from
    parsing) are clamped; anything further out raises :class:`DomainError`.
    """
    v = float(value)
    if not (-UNIT_SLACK <= v <= 1.0 + UNIT_SLACK):
        raise DomainError(f"value {value!r} lies outside [0, 1]")
    return min(max(v, 0.0), 1.0)


def tnorm(kind: TNorm, x: float, y: float) -> float:
    """T(x, y): min(x, y), x*y, or max(x + y - 1, 0)."""
    if kind is TNorm.MINIMUM:
        return min(x, y)
    if kind is TNorm.PRODUCT:
        return x * y
    return max(x + y - 1.0, 0.0)


def residual(kind: TNorm, x: float, y: float) -> float:
    """Residual implicator of the t-norm: the greatest z with T(x, z) <= y.

    Goedel for minimum, Goguen for product, min(1 - x + y, 1) for
    Lukasiewicz.  x = 0 always falls into the x <= y branch, so no division
    by zero is reachable.
    """
    if kind is TNorm.MINIMUM:
        return 1.0 if x <= y else y
    if kind is TNorm.PRODUCT:
        return 1.0 if x <= y else y / x
    return min(1.0 - x + y, 1.0)


def clamp_down(x: float, delta: float) -> float:
    """Shift ``x`` down by ``delta``, clamped at 0."""
    return max(x - delta, 0.0)


def clamp_up(x: float, delta: float) -> float:
    """Shift ``x`` up by ``delta``, clamped at 1."""
    return min(x + delta, 1.0)


def product_slack(u: float, x: float, y: float, z: float) -> float:
    """Least shift d in [0, 1] with (x - d)+ <= u * goguen(y, min(z + d, 1)).

    Closed form: max((x - u)+, min(ratio, (y - z)+)) where ratio is
    (x*y - u*z)+ / (u + y) for u > 0 and collapses to x for u = 0.
    """
    if u > 0.0:
        ratio = max(x * y - u * z, 0.0) / (u + y)
    else:
        ratio = x
    return max(max(x - u, 0.0), min(ratio, max(y - z, 0.0)))


def lukasiewicz_slack(u: float, x: float, y: float, z: float) -> float:
    """Least shift d in [0, 1] with (x - d)+ <= (luka(y, min(z + d, 1)) - u)+.

    Closed form: min(x, max(v+, (v + y - z)+ / 2)) with v = x + u - 1.
    """
    v = x + u - 1.0
    return min(x, max(max(v, 0.0), max(v + y - z, 0.0) / 2.0))
