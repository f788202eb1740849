"""Approximate inverse of x -> E_{a,b}(-x) by inverting the approximants.

The function being inverted decreases from 1/Gamma(b) at the origin to 0,
so the inverse maps (0, 1/Gamma(b)] onto [0, inf).  Setting R(x) = y and
clearing denominators gives

    s(x) q(x) y - p(x) = 0,

a quadratic in x for the (3, 2) type (solved in closed form) and a
quartic for the fourth-order types (solved by the polynomial root
finder; empirically the quartic has exactly one positive real root,
and anything else is surfaced as an error, never silently picked).
"""

import math

from .errors import (
    InverseDomainError,
    MultiplePositiveRoots,
    NegativeDiscriminant,
    NoPositiveRoot,
)
from .gamma import rgamma
from .pade import RationalApproximant, Regime, _horner
from .poly import Poly, roots

# |Im| below this (relative) counts as a real root; simultaneous
# iteration leaves imaginary dust on real roots.
REAL_ROOT_TOL = 1e-8


def _check_domain(r: RationalApproximant, y: float):
    top = rgamma(r.spec.beta)
    if not (0.0 < y <= top * (1.0 + 1e-12)):
        raise InverseDomainError(
            f"y={y} outside (0, {top:.17g}] = range of E_({r.spec.alpha}, "
            f"{r.spec.beta})(-x) on x >= 0"
        )
    return top


def invert_r32(r: RationalApproximant, y: float) -> float:
    """Closed-form inversion of the (3, 2) approximant."""
    if (r.spec.m, r.spec.n) != (3, 2):
        raise ValueError("invert_r32 requires a (3, 2) approximant")
    top = _check_domain(r, y)
    if y >= top * (1.0 - 1e-13):
        return 0.0
    a, b = r.spec.alpha, r.spec.beta
    q0, q1 = r.q[0], r.q[1]
    if r.spec.regime is Regime.BETA_GREATER:
        g = r.scaling_constant          # Gamma(b - a)
        half = 0.5 * q1 - 0.5 / (g * y)
        rad = half * half - q0 * (1.0 - rgamma(b) / y)
    else:
        # x^2 + q1 x + (q0 + 1/(Gamma(-a) y)) = 0, positive branch;
        # note scaling_constant = -Gamma(-a)
        rad = 0.25 * q1 * q1 - q0 + 1.0 / (r.scaling_constant * y)
    if rad < 0.0:
        raise NegativeDiscriminant(
            f"negative radicand {rad:.6g} inverting (3, 2) at y={y}", rad
        )
    if r.spec.regime is Regime.BETA_GREATER:
        return 0.5 / (r.scaling_constant * y) - 0.5 * q1 + math.sqrt(rad)
    return -0.5 * q1 + math.sqrt(rad)


def invert_fourth(r: RationalApproximant, y: float) -> float:
    """Inversion of a fourth-order approximant via its quartic.

    One Newton step against the original residual s(x) q(x) y - p(x)
    polishes the selected root.
    """
    if r.spec.nu != 4:
        raise ValueError("invert_fourth requires a fourth-order approximant")
    top = _check_domain(r, y)
    if y >= top * (1.0 - 1e-13):
        return 0.0
    q = r.q
    if r.spec.regime is Regime.BETA_GREATER:
        c = r.scaling_constant * y      # Gamma(b - a) y
        p1, p2, p3 = r.p[1], r.p[2], r.p[3]
        quartic = (c * q[0] - p1, c * q[1] - p2, c * q[2] - p3, c * q[3] - 1.0, c)
    else:
        c = -r.scaling_constant * y     # Gamma(-a) y, negative
        p2, p3 = r.p[2], r.p[3]
        quartic = (c * q[0] + p2, c * q[1] + p3, c * q[2] + 1.0, c * q[3], c)

    candidates = roots(Poly(quartic)).roots
    positive = [
        z.real
        for z in candidates
        if abs(z.imag) <= REAL_ROOT_TOL * (1.0 + abs(z)) and z.real > 0.0
    ]
    if not positive:
        raise NoPositiveRoot(
            f"no positive real root inverting ({r.spec.m}, {r.spec.n}) at y={y}",
            candidates,
        )
    if len(positive) > 1:
        raise MultiplePositiveRoots(
            f"{len(positive)} positive real roots inverting "
            f"({r.spec.m}, {r.spec.n}) at y={y}",
            candidates,
        )
    return _newton_polish(r, y, positive[0])


def _newton_polish(r: RationalApproximant, y: float, x: float) -> float:
    pw = r.x_power
    c = r.scaling_constant
    qv = _horner(r.q, x)
    dq = _horner(_deriv_coeffs(r.q), x)
    pv = _horner(r.p, x)
    dp = _horner(_deriv_coeffs(r.p), x)
    s = c * x**pw
    ds = c * pw * x ** (pw - 1)
    f = s * qv * y - pv
    df = (ds * qv + s * dq) * y - dp
    if df != 0.0:
        x = x - f / df
    return x


def residual(r: RationalApproximant, y: float, x: float) -> float:
    """|s(x) q(x) y - p(x)|, the quantity the Newton polish drives down."""
    s = r.scaling_constant * x**r.x_power
    return abs(s * _horner(r.q, x) * y - _horner(r.p, x))


def _deriv_coeffs(coeffs):
    return tuple(k * c for k, c in enumerate(coeffs) if k > 0) or (0.0,)
