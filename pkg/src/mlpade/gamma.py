"""Real gamma function, reciprocal gamma, and pole-aware gamma ratios.

The coefficient systems behind the rational approximants are full of
entries like Gamma(b - a) / Gamma(b - 2a) where the denominator argument
can land exactly on a pole of Gamma (a non-positive integer).  The
convention throughout this package is that 1/Gamma is treated as an
entire function: the reciprocal is exactly 0 at the poles, so such
entries vanish instead of exploding.

The kernel itself is the platform gamma (Lanczos-class, with internal
reflection for negative arguments); this module adds the pole handling,
the overflow signal, and the centralized ratio used by every system
assembler.
"""

import math
from dataclasses import dataclass

from .errors import GammaOverflow, NumeratorPole

# Nearest-integer test is done on the argument, never on the value.
POLE_TOL = 1e-14

# Largest x with Gamma(x) finite in double precision.
OVERFLOW_X = 171.624376956302725


def is_gamma_pole(x: float) -> bool:
    """True iff x is a non-positive integer to within POLE_TOL."""
    n = round(x)
    return n <= 0 and abs(x - n) < POLE_TOL


@dataclass(frozen=True)
class GammaValue:
    value: float
    is_pole: bool


def gamma(x: float) -> GammaValue:
    """Gamma(x) with an explicit pole flag.

    Raises GammaOverflow for x beyond the double-precision range instead
    of returning infinity.
    """
    if not math.isfinite(x):
        raise ValueError(f"gamma argument must be finite, got {x!r}")
    if is_gamma_pole(x):
        return GammaValue(math.inf, True)
    if x > OVERFLOW_X:
        raise GammaOverflow(f"gamma({x}) overflows double precision")
    return GammaValue(math.gamma(x), False)


def rgamma(x: float) -> float:
    """1/Gamma(x), exactly 0 at the poles and smooth everywhere else."""
    if is_gamma_pole(x):
        return 0.0
    if x > OVERFLOW_X:
        # 1/Gamma underflows gracefully; go through lgamma to avoid the
        # OverflowError the direct path would raise.
        return math.exp(-math.lgamma(x))
    return 1.0 / math.gamma(x)


def gamma_ratio(num_arg: float, den_arg: float) -> float:
    """Gamma(num_arg) / Gamma(den_arg) under the rgamma-at-poles convention.

    The denominator hitting a pole gives exactly 0.  A pole in the
    numerator has no finite value and is an error.
    """
    if is_gamma_pole(num_arg):
        raise NumeratorPole(f"gamma ratio with numerator pole at {num_arg}")
    r = rgamma(den_arg)
    if r == 0.0:
        return 0.0
    return gamma(num_arg).value * r
