"""Partial fraction decomposition of the rational approximants.

The decomposed object is the approximant itself, R(x) = p(x)/(s(x)q(x)).
Because the numerator's low-order coefficients vanish structurally,
p(x)/x (or p(x)/x^2) is a polynomial, so the scaling contributes no pole
at the origin and every pole of R is a root of q.  Weights come from the
simple-pole residue formula.

Empirically the poles occur in complex-conjugate pairs, which halves the
work downstream: R(x) = sum over pairs of 2 Re[c / (x - r)].  Pairing is
tolerance-based; when it fails the decomposition degrades to the full
complex sum with a warning instead of refusing.
"""

import logging
from dataclasses import dataclass

from .errors import RealPositivePole, RepeatedPoles
from .pade import RationalApproximant
from .poly import PAIRING_TOL, Poly, conjugate_pairs, derivative, eval_poly, roots

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartialFractionForm:
    """Pole/weight pairs of an approximant.

    pairing_ok: pairs holds one (pole, weight) per conjugate pair with
    Im(pole) > 0 and the value is sum of 2 Re[c/(x - r)].  Otherwise
    pairs holds every pole with its weight and the value is the real
    part of the plain complex sum.
    """

    spec: object
    pairs: tuple
    pairing_ok: bool


def decompose(r: RationalApproximant) -> PartialFractionForm:
    """Poles and weights of R; raises on repeated or positive-real poles."""
    q = Poly(r.q)
    rts = roots(q).roots
    scale = 1.0 + max(abs(z) for z in rts)
    for i, zi in enumerate(rts):
        for zj in rts[i + 1:]:
            if abs(zi - zj) <= 1e-8 * scale:
                raise RepeatedPoles(
                    f"denominator roots {zi:.6g} and {zj:.6g} too close for "
                    "a simple-pole decomposition"
                )
    for z in rts:
        dist = abs(z.imag) if z.real >= 0.0 else abs(z)
        if dist <= 1e-8:
            raise RealPositivePole(f"pole {z:.6g} lies on [0, inf)")

    num = Poly(r.numerator_reduced())
    dq = derivative(q)
    weight = {z: eval_poly(num, z) / (r.scaling_constant * eval_poly(dq, z))
              for z in rts}

    reps, ok = conjugate_pairs(rts, PAIRING_TOL)
    if ok:
        # roots come symmetrized, so each representative is a dict key verbatim
        pairs = tuple(sorted(((z, weight[z]) for z in reps),
                             key=lambda rc: (rc[0].real, rc[0].imag)))
        return PartialFractionForm(r.spec, pairs, True)

    log.warning(
        "conjugate pairing failed for (%s, %s) type (%d, %d); "
        "falling back to the unpaired complex sum",
        r.spec.alpha, r.spec.beta, r.spec.m, r.spec.n,
    )
    pairs = tuple(sorted(weight.items(), key=lambda rc: (rc[0].real, rc[0].imag)))
    return PartialFractionForm(r.spec, pairs, False)


def eval_pfd(f: PartialFractionForm, x: float) -> float:
    """Value of the decomposed approximant at x >= 0."""
    if x < 0.0:
        raise ValueError(f"partial fraction form defined for x >= 0, got {x}")
    if f.pairing_ok:
        return sum(2.0 * (c / (x - r)).real for r, c in f.pairs)
    return sum(c / (x - r) for r, c in f.pairs).real


def to_json_dict(f: PartialFractionForm) -> dict:
    return {
        "schema": "ml-pade/1",
        "pairs": [
            {"re_r": r.real, "im_r": r.imag, "re_c": c.real, "im_c": c.imag}
            for r, c in f.pairs
        ],
        "pairing_ok": f.pairing_ok,
    }
