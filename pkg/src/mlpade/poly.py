"""Dense polynomials of degree <= 4: evaluation, derivative, roots.

Everything the package needs from polynomials is small: denominators of
the rational approximants (degree 2 or 4) and the inversion quartics.
Quadratics are solved in closed form with a cancellation-safe
discriminant; degrees 3 and 4 go through Durand-Kerner simultaneous
iteration followed by one Newton polish per root.  Closed-form cubic and
quartic formulas are deliberately avoided.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import NonConvergence

# Two roots are declared a conjugate pair within this relative tolerance.
PAIRING_TOL = 1e-8

_DK_MAX_ITER = 500
_DK_RESIDUAL = 1e-13


@dataclass(frozen=True)
class Poly:
    """Dense polynomial, coefficients ascending (c0 + c1 x + ... + cd x^d)."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(self.coeffs)
        if not c:
            raise ValueError("polynomial needs at least one coefficient")
        if len(c) > 1 and c[-1] == 0:
            raise ValueError("leading coefficient must be non-zero")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_real(self) -> bool:
        return all(complex(c).imag == 0.0 for c in self.coeffs)

    def __call__(self, x):
        return eval_poly(self, x)


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    residual_bound: float


def eval_poly(p: Poly, x):
    """Horner evaluation; exact for degree 0."""
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    if p.degree == 0:
        return Poly((0.0 * p.coeffs[0],))
    return Poly(tuple(k * c for k, c in enumerate(p.coeffs) if k > 0))


def roots(p: Poly) -> RootSet:
    """All complex roots of p, degree 1 through 4.

    For real-coefficient input the result is conjugate-closed: paired
    roots are symmetrized to exact conjugates.  Raises NonConvergence if
    the simultaneous iteration misses its residual target.
    """
    d = p.degree
    if d < 1 or d > 4:
        raise ValueError(f"root extraction supports degrees 1..4, got {d}")
    c = [complex(v) for v in p.coeffs]
    if abs(c[-1]) == 0.0:
        raise ValueError("leading coefficient must be non-zero")

    if d == 1:
        rts = [-c[0] / c[1]]
    elif d == 2:
        rts = _roots_quadratic(c[0], c[1], c[2])
    else:
        rts = _roots_durand_kerner(p, c)

    if p.is_real():
        rts = _symmetrize_conjugates(rts)
    rts.sort(key=lambda z: (z.real, z.imag))

    # Residual check, normalized two ways: against the magnitude of the
    # evaluated terms (so large roots are not penalized) with an absolute
    # coefficient-scale fallback (so root clusters at the origin, where
    # both vanish together, are not penalized either).
    abs_scale = 1.0 + max(abs(v) for v in c)
    residual = 0.0
    worst = 0.0
    for r in rts:
        pv = abs(eval_poly(p, r))
        terms = sum(abs(ck) * abs(r) ** k for k, ck in enumerate(c))
        residual = max(residual, pv)
        backward = pv / terms if terms > 0 else 0.0
        if pv > _DK_RESIDUAL * abs_scale:
            worst = max(worst, backward)
    if worst > 1e-12:
        raise NonConvergence(
            f"polynomial roots backward error {worst:.3e} above target "
            f"for degree {d}"
        )
    return RootSet(tuple(rts), residual)


def _roots_quadratic(c0, c1, c2):
    # q = -(c1 + sgn * sqrt(disc)) / 2 with the sign chosen to avoid
    # cancellation; the two roots are q/c2 and c0/q.
    disc = cmath.sqrt(c1 * c1 - 4.0 * c2 * c0)
    if (c1.conjugate() * disc).real >= 0.0:
        q = -0.5 * (c1 + disc)
    else:
        q = -0.5 * (c1 - disc)
    if q == 0:
        # c1 == 0 and c0 == 0: double root at the origin.
        return [0.0 + 0.0j, 0.0 + 0.0j]
    return [q / c2, c0 / q]


def _roots_durand_kerner(p: Poly, c):
    d = len(c) - 1
    lead = c[-1]
    monic = [v / lead for v in c]
    scale = 1.0 + max(abs(v) for v in monic[:-1])

    # Starting points on a circle with irrational phase offsets; avoids
    # the symmetric stagnation of the naive (0.4 + 0.9i)^k seed.
    radius = 1.0 + scale
    z = [
        radius * cmath.exp(2j * math.pi * (k / d + 0.26))
        for k in range(d)
    ]

    def pval(x):
        acc = monic[-1]
        for v in reversed(monic[:-1]):
            acc = acc * x + v
        return acc

    for _ in range(_DK_MAX_ITER):
        settled = True
        for i in range(d):
            denom = 1.0 + 0.0j
            for j in range(d):
                if j != i:
                    denom *= z[i] - z[j]
            if denom == 0:
                denom = 1e-30
            step = pval(z[i]) / denom
            z[i] = z[i] - step
            if abs(step) > _DK_RESIDUAL * (1.0 + abs(z[i])):
                settled = False
        if settled:
            break

    dp = derivative(p)
    polished = []
    for r in z:
        slope = eval_poly(dp, r)
        if slope != 0:
            r = r - eval_poly(p, r) / slope
        polished.append(r)
    return polished


def _symmetrize_conjugates(rts):
    """Average near-conjugate pairs into exact conjugates (real input only).

    Lone roots (including real roots carrying iteration dust) are kept
    verbatim; only matched pairs are touched, so tiny genuine pairs near
    the real axis survive.
    """
    out = []
    used = [False] * len(rts)
    for i, r in enumerate(rts):
        if used[i]:
            continue
        mate = None
        for j in range(i + 1, len(rts)):
            if used[j]:
                continue
            # scale-relative: distinct tiny roots must not be mistaken
            # for a conjugate pair
            if abs(rts[j] - r.conjugate()) <= PAIRING_TOL * abs(r):
                mate = j
                break
        if mate is None:
            used[i] = True
            out.append(r)
        else:
            used[i] = used[mate] = True
            m = 0.5 * (r + rts[mate].conjugate())
            out.append(m)
            out.append(m.conjugate())
    return out


def conjugate_pairs(rts, tol=PAIRING_TOL):
    """Group roots into conjugate pairs, upper-half representative first.

    Returns (pairs, ok): pairs is a list of the Im > 0 representatives in
    the paired case; ok is False when some root could not be matched, in
    which case pairs holds nothing useful for the caller.
    """
    pending = list(rts)
    pairs = []
    while pending:
        r = pending.pop(0)
        mate_idx = None
        for j, s in enumerate(pending):
            if abs(s - r.conjugate()) <= tol * (1.0 + abs(r)):
                mate_idx = j
                break
        if mate_idx is None:
            return [], False
        pending.pop(mate_idx)
        pairs.append(r if r.imag > 0 else r.conjugate())
    return pairs, True
