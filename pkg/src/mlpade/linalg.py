"""Dense LU with partial pivoting for the tiny systems in this package.

Every matrix here is at most 8x8: coefficient systems are 6 or 7
unknowns, and the matrix-argument solves in the applications are 2x2 or
4x4 per pole.  A handwritten pivoted LU (real or complex, the code is
generic over the scalar) keeps the package dependency-free and is more
than fast enough at this size.

One step of iterative refinement is applied after each solve; with the
residual computed in working precision that pushes the solution error to
a few ulps for the well-conditioned systems this package produces.
"""

from .errors import SingularMatrix

_PIVOT_REL_TOL = 1e-14


def mat_norm_inf(rows):
    return max(sum(abs(v) for v in row) for row in rows) if rows else 0.0


def vec_norm_inf(v):
    return max(abs(x) for x in v) if v else 0.0


class LU:
    """Pivoted LU factorization of a square matrix (list of rows)."""

    def __init__(self, rows):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.a = [list(r) for r in rows]          # original, for refinement
        self.norm = mat_norm_inf(rows)
        lu = [list(r) for r in rows]
        piv = list(range(n))
        tol = _PIVOT_REL_TOL * (self.norm if self.norm > 0 else 1.0)
        for k in range(n):
            p = max(range(k, n), key=lambda i: abs(lu[i][k]))
            if abs(lu[p][k]) < tol:
                raise SingularMatrix(
                    f"pivot {abs(lu[p][k]):.3e} below {tol:.3e} at column {k}"
                )
            if p != k:
                lu[p], lu[k] = lu[k], lu[p]
                piv[p], piv[k] = piv[k], piv[p]
            inv_pivot = 1.0 / lu[k][k]
            for i in range(k + 1, n):
                m = lu[i][k] * inv_pivot
                lu[i][k] = m
                if m != 0:
                    row_i, row_k = lu[i], lu[k]
                    for j in range(k + 1, n):
                        row_i[j] -= m * row_k[j]
        self.lu = lu
        self.piv = piv

    def _solve_factored(self, b):
        n, lu, piv = self.n, self.lu, self.piv
        x = [b[piv[i]] for i in range(n)]
        for i in range(1, n):
            s = x[i]
            row = lu[i]
            for j in range(i):
                s -= row[j] * x[j]
            x[i] = s
        for i in range(n - 1, -1, -1):
            s = x[i]
            row = lu[i]
            for j in range(i + 1, n):
                s -= row[j] * x[j]
            x[i] = s / row[i]
        return x

    def solve(self, b, refine=True):
        if len(b) != self.n:
            raise ValueError("right-hand side has wrong length")
        x = self._solve_factored(list(b))
        if refine:
            r = self._residual(x, b)
            dx = self._solve_factored(r)
            x = [xi + di for xi, di in zip(x, dx)]
        return x

    def _residual(self, x, b):
        out = []
        for i in range(self.n):
            s = b[i]
            row = self.a[i]
            for j in range(self.n):
                s -= row[j] * x[j]
            out.append(s)
        return out

    def solve_columns(self, rhs_rows, refine=True):
        """Solve A X = B with B given as rows; returns X as rows."""
        n = self.n
        if len(rhs_rows) != n:
            raise ValueError("right-hand side row count mismatch")
        k = len(rhs_rows[0])
        cols = []
        for c in range(k):
            col = [rhs_rows[i][c] for i in range(n)]
            cols.append(self.solve(col, refine=refine))
        return [[cols[c][i] for c in range(k)] for i in range(n)]

    def rcond_estimate(self):
        """1 / (norm_inf(A) * est norm_inf(A^-1)), one triangular-solve probe."""
        if self.norm == 0:
            return 0.0
        probe = [1.0 if i % 2 == 0 else -1.0 for i in range(self.n)]
        try:
            y = self._solve_factored(probe)
        except ZeroDivisionError:
            return 0.0
        inv_norm = vec_norm_inf(y) / vec_norm_inf(probe)
        if inv_norm == 0:
            return 0.0
        return 1.0 / (self.norm * inv_norm)


def solve_real(rows, b):
    """Solve the real system A x = b; raises SingularMatrix on pivot collapse."""
    return LU(rows).solve(b)


def solve_complex(rows, rhs_rows):
    """Solve the complex system A X = B (multi-RHS, B and X as rows)."""
    return LU(rows).solve_columns(rhs_rows)


def mat_vec(rows, v):
    return [sum(r[j] * v[j] for j in range(len(v))) for r in rows]
