"""Mittag-Leffler function of a real matrix argument via shifted solves.

With the approximant in conjugate partial-fraction form, E_{a,b}(B) for a
real square matrix B reduces to one complex linear solve per pole pair:

    E_{a,b}(B) ~ 2 Re sum_pairs c_i (-B - r_i I)^{-1}

and likewise for the action on a vector without forming the full
function.  The result of the paired combination is exactly real, so the
real part is taken analytically rather than discarded numerically.

Shifts colliding with the spectrum of -B surface as SingularMatrix from
the solver; no up-front eigenvalue screening is done.
"""

from .errors import PairingUnavailable
from .linalg import LU
from .pfd import PartialFractionForm


def _require_pairs(f: PartialFractionForm):
    if not f.pairing_ok:
        raise PairingUnavailable(
            "matrix evaluation needs a conjugate-paired decomposition"
        )


def _shifted(b_rows, shift):
    n = len(b_rows)
    m = [[-complex(b_rows[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        m[i][i] -= shift
    return m


def mlf_action(b_rows, rhs, f: PartialFractionForm):
    """2 Re sum_pairs v_i with (-B - r_i I) v_i = c_i rhs; returns a real vector."""
    _require_pairs(f)
    n = len(b_rows)
    if len(rhs) != n:
        raise ValueError("rhs length does not match the matrix")
    acc = [0j] * n
    for r, c in f.pairs:
        v = LU(_shifted(b_rows, r)).solve([c * complex(x) for x in rhs])
        for i in range(n):
            acc[i] += v[i]
    return [2.0 * z.real for z in acc]


def mlf_matrix(b_rows, f: PartialFractionForm):
    """Full E_{a,b}(B) as real rows; one multi-RHS solve per pole pair."""
    _require_pairs(f)
    n = len(b_rows)
    eye = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    acc = [[0j] * n for _ in range(n)]
    for r, c in f.pairs:
        x = LU(_shifted(b_rows, r)).solve_columns(eye)
        for i in range(n):
            for j in range(n):
                acc[i][j] += c * x[i][j]
    return [[2.0 * acc[i][j].real for j in range(n)] for i in range(n)]
