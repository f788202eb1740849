"""Construction and evaluation of the global rational approximants.

An approximant of type (m, n) matches m coefficients of the power series
of s(x) E_{a,b}(-x) at the origin and n - 1 coefficients of its tail
expansion at infinity, where the scaling

    s(x) = Gamma(b - a) x        (b > a)
    s(x) = -Gamma(-a) x^2        (b = a)

normalizes the leading tail term to 1.  Both polynomials have degree
nu = (m + n - 1)/2 and are monic; the first coefficient(s) of the
numerator vanish structurally.  The supported types are (3, 2) in closed
form and the three fourth-order types (5, 4), (6, 3), (7, 2) through a
linear system assembled entrywise from gamma ratios (pole convention:
1/Gamma = 0 at non-positive integers).
"""

import enum
import logging
import math
from dataclasses import dataclass

from .errors import IllConditioned, InvalidSpec
from .gamma import gamma, gamma_ratio, rgamma
from .linalg import LU
from .poly import Poly, roots

log = logging.getLogger(__name__)

SUPPORTED_TYPES = ((3, 2), (5, 4), (6, 3), (7, 2))

# Inputs closer than this to b == a use the quadratic-scaling branch;
# the linear branch would hit the Gamma(b - a) blowup.
REGIME_TOL = 1e-12

RCOND_WARN = 1e-12


class Regime(enum.Enum):
    BETA_GREATER = "beta_greater"
    BETA_EQUAL = "beta_equal"


@dataclass(frozen=True)
class ApproximantSpec:
    alpha: float
    beta: float
    m: int
    n: int
    regime: Regime

    @property
    def nu(self) -> int:
        return (self.m + self.n - 1) // 2


def make_spec(alpha: float, beta: float, m: int, n: int) -> ApproximantSpec:
    """Validate parameters against the admissible set and pick the regime."""
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise InvalidSpec("alpha and beta must be finite")
    if not (0.0 < alpha <= 1.0):
        raise InvalidSpec(f"0 < alpha <= 1 required, got alpha={alpha}")
    if beta < alpha - REGIME_TOL:
        raise InvalidSpec(f"beta >= alpha required, got alpha={alpha}, beta={beta}")
    if abs(alpha - 1.0) <= REGIME_TOL and abs(beta - 1.0) <= REGIME_TOL:
        raise InvalidSpec("(alpha, beta) != (1, 1) required")
    if (m, n) not in SUPPORTED_TYPES:
        raise InvalidSpec(
            f"type ({m}, {n}) not supported; available: "
            + ", ".join(str(t) for t in SUPPORTED_TYPES)
        )
    regime = Regime.BETA_EQUAL if abs(beta - alpha) <= REGIME_TOL else Regime.BETA_GREATER
    if regime is Regime.BETA_EQUAL and abs(alpha - 1.0) <= REGIME_TOL:
        raise InvalidSpec("(alpha, beta) != (1, 1) required")
    return ApproximantSpec(alpha, beta, m, n, regime)


def construction_note(spec: ApproximantSpec):
    """Advisory message for admissible but known-weak parameter choices."""
    if spec.regime is Regime.BETA_EQUAL and spec.m < spec.n + 3:
        return (
            f"type ({spec.m}, {spec.n}) with beta == alpha has reduced accuracy "
            "near the origin; prefer m >= n + 3, e.g. (6, 3) or (7, 2)"
        )
    return None


@dataclass(frozen=True)
class RationalApproximant:
    """Monic numerator/denominator coefficients plus the tail scaling.

    p and q are ascending-degree tuples of length nu + 1.  The function
    represented is p(x) / (s(x) q(x)) with s(x) = scaling_constant * x
    (beta > alpha) or scaling_constant * x^2 (beta == alpha); the
    scaling_constant is Gamma(b - a) respectively -Gamma(-a), positive in
    both regimes.
    """

    spec: ApproximantSpec
    p: tuple
    q: tuple
    scaling_constant: float
    cond_estimate: float

    @property
    def x_power(self) -> int:
        return 1 if self.spec.regime is Regime.BETA_GREATER else 2

    def numerator_reduced(self) -> tuple:
        """p(x) / x (or / x^2): the structural zeros at the origin divided out."""
        return self.p[self.x_power:]


# ---------------------------------------------------------------------------
# series coefficients of the scaled function at both ends


def _taylor_coeff(spec: ApproximantSpec, i: int) -> float:
    """Coefficient of x^i in the origin expansion of s(x) E_{a,b}(-x)."""
    a, b = spec.alpha, spec.beta
    if spec.regime is Regime.BETA_GREATER:
        if i < 1:
            return 0.0
        sign = 1.0 if (i - 1) % 2 == 0 else -1.0
        return sign * gamma_ratio(b - a, b + a * (i - 1))
    if i < 2:
        return 0.0
    sign = 1.0 if (i - 2) % 2 == 0 else -1.0
    return sign * -gamma_ratio(-a, a * (i - 1))


def _asym_coeff(spec: ApproximantSpec, j: int) -> float:
    """Coefficient of x^-j in the tail expansion of s(x) E_{a,b}(-x)."""
    if j == 0:
        return 1.0
    a, b = spec.alpha, spec.beta
    sign = 1.0 if j % 2 == 0 else -1.0
    if spec.regime is Regime.BETA_GREATER:
        return sign * gamma_ratio(b - a, b - a * (j + 1))
    return sign * gamma_ratio(-a, -a * (j + 1))


# ---------------------------------------------------------------------------
# linear system assembly (fourth order, and generic cross-check for (3, 2))


def assemble_system(spec: ApproximantSpec):
    """Matrix and right-hand side for the unknown coefficients.

    Unknowns, in order: p_k for k in [k0, nu) then q_k for k in [0, nu),
    where k0 = 1 (beta > alpha) or 2 (beta == alpha); p_nu = q_nu = 1 are
    fixed.  Rows are the vanishing origin coefficients x^k0 .. x^(m-1)
    followed by the vanishing tail coefficients, lowest power of x first.
    """
    nu = spec.nu
    k0 = 1 if spec.regime is Regime.BETA_GREATER else 2
    n_p = nu - k0
    n_unknowns = n_p + nu

    a_coef = [_taylor_coeff(spec, i) for i in range(spec.m + 1)]
    b_coef = [_asym_coeff(spec, j) for j in range(spec.n + 1)]

    rows, rhs = [], []

    # origin matching: coefficient of x^i in p(x) - q(x) a(x) vanishes
    for i in range(k0, spec.m):
        row = [0.0] * n_unknowns
        r = 0.0
        if k0 <= i < nu:
            row[i - k0] = 1.0
        elif i == nu:
            r -= 1.0                     # p_nu = 1
        for l in range(nu + 1):
            k = i - l
            if k < 0 or a_coef[k] == 0.0:
                continue
            if l < nu:
                row[n_p + l] -= a_coef[k]
            else:
                r += a_coef[k]           # q_nu = 1
        rows.append(row)
        rhs.append(r)

    # tail matching: coefficient of x^t in p(x) - q(x) b(1/x) vanishes,
    # t = nu - j for j = n-1 .. 1 (written lowest t first)
    for j in range(spec.n - 1, 0, -1):
        t = nu - j
        row = [0.0] * n_unknowns
        r = 0.0
        if k0 <= t < nu:
            row[t - k0] = 1.0
        elif t == nu:
            r -= 1.0
        for l in range(t, nu + 1):
            bj = b_coef[l - t]
            if bj == 0.0:
                continue
            if l < nu:
                row[n_p + l] -= bj
            else:
                r += bj
        rows.append(row)
        rhs.append(r)

    return rows, rhs


def _closed_form_32(spec: ApproximantSpec):
    a, b = spec.alpha, spec.beta
    if spec.regime is Regime.BETA_GREATER:
        gb = gamma(b).value
        gba = gamma(b - a).value
        gbpa = gamma(b + a).value
        c = 1.0 / (gbpa * gba - gb * gb)
        r2 = rgamma(b - 2.0 * a)
        p1 = c * (gb * gbpa - gbpa * gba * gba * r2)
        q0 = c * (gb * gb * gbpa / gba - gb * gbpa * gba * r2)
        q1 = c * (gb * gbpa - gb * gb * gba * r2)
        return (0.0, p1, 1.0), (q0, q1, 1.0)
    ga = gamma(a).value
    gma = gamma(-a).value
    q0 = -ga / gma
    q1 = gma * rgamma(-2.0 * a)
    return (0.0, 0.0, 1.0), (q0, q1, 1.0)


def construct(spec: ApproximantSpec, strict: bool = False) -> RationalApproximant:
    """Build the approximant; solves the coefficient system for fourth order.

    strict=True raises IllConditioned instead of logging when the system's
    reciprocal condition estimate is below 1e-12.
    """
    nu = spec.nu
    rows, rhs = assemble_system(spec)
    lu = LU(rows)
    rcond = lu.rcond_estimate()

    if (spec.m, spec.n) == (3, 2):
        p, q = _closed_form_32(spec)
    else:
        sol = lu.solve(rhs)
        k0 = 1 if spec.regime is Regime.BETA_GREATER else 2
        n_p = nu - k0
        p = [0.0] * (nu + 1)
        for k in range(k0, nu):
            p[k] = sol[k - k0]
        p[nu] = 1.0
        q = [sol[n_p + k] for k in range(nu)] + [1.0]
        p, q = tuple(p), tuple(q)

    if rcond < RCOND_WARN:
        msg = (
            f"coefficient system for ({spec.alpha}, {spec.beta}) type "
            f"({spec.m}, {spec.n}) is ill-conditioned (rcond ~ {rcond:.2e})"
        )
        if strict:
            raise IllConditioned(msg, rcond)
        log.warning(msg)

    if spec.regime is Regime.BETA_GREATER:
        scaling = gamma(spec.beta - spec.alpha).value
    else:
        scaling = -gamma(-spec.alpha).value

    approx = RationalApproximant(spec, tuple(p), tuple(q), scaling, rcond)
    _check_denominator_sign(approx)
    return approx


def _check_denominator_sign(r: RationalApproximant):
    """The denominator must not vanish on (0, inf)."""
    for root in roots(Poly(r.q)).roots:
        if abs(root.imag) <= 1e-8 * (1.0 + abs(root)) and root.real > 0.0:
            raise InvalidSpec(
                f"denominator has a positive real root at {root.real:.6g} for "
                f"({r.spec.alpha}, {r.spec.beta}) type ({r.spec.m}, {r.spec.n})"
            )


# ---------------------------------------------------------------------------
# evaluation


def eval_scalar(r: RationalApproximant, x: float) -> float:
    """Approximant value at x >= 0; the origin limit is taken analytically."""
    if x < 0.0:
        raise ValueError(f"approximant defined for x >= 0, got {x}")
    if x == 0.0:
        return r.p[r.x_power] / (r.scaling_constant * r.q[0])
    num = _horner(r.numerator_reduced(), x)
    den = _horner(r.q, x)
    return num / (r.scaling_constant * den)


def asymptotic_check(r: RationalApproximant, x: float) -> float:
    """s(x) R(x) = p(x)/q(x); tends to 1 as x grows (both polynomials monic)."""
    return _horner(r.p, x) / _horner(r.q, x)


def _horner(coeffs, x):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def eval_error(r: RationalApproximant, xs, config=None, runtime_seconds=0.0):
    """Pointwise comparison against the oracle over a grid."""
    from .oracle import mlf_oracle
    from .report import make_report

    approx = [eval_scalar(r, x) for x in xs]
    exact = [mlf_oracle(r.spec.alpha, r.spec.beta, x, config) for x in xs]
    return make_report(list(xs), approx, exact, runtime_seconds)


def to_json_dict(r: RationalApproximant) -> dict:
    return {
        "schema": "ml-pade/1",
        "alpha": r.spec.alpha,
        "beta": r.spec.beta,
        "m": r.spec.m,
        "n": r.spec.n,
        "regime": r.spec.regime.value,
        "p": list(r.p),
        "q": list(r.q),
        "scaling_constant": r.scaling_constant,
        "cond_estimate": r.cond_estimate,
    }
