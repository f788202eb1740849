import random

import numpy as np
import pytest

from conftest import TEST_PAIRS
from mlpade.errors import PairingUnavailable, SingularMatrix
from mlpade.linalg import solve_complex
from mlpade.matml import mlf_action, mlf_matrix
from mlpade.pade import eval_scalar
from mlpade.pfd import PartialFractionForm, decompose


def test_diagonal_reduces_to_scalar(approximants):
    r = approximants(0.5, 1.5, 7, 2)
    f = decompose(r)
    out = mlf_matrix([[-1.0, 0.0], [0.0, -4.0]], f)
    assert out[0][0] == pytest.approx(eval_scalar(r, 1.0), abs=1e-10)
    assert out[1][1] == pytest.approx(eval_scalar(r, 4.0), abs=1e-10)
    assert abs(out[0][1]) <= 1e-12 and abs(out[1][0]) <= 1e-12


@pytest.mark.parametrize("pair", TEST_PAIRS)
def test_diagonal_consistency_random(pair, approximants):
    rng = random.Random(hash(pair) & 0xFFFF)
    r = approximants(*pair, 7, 2)
    f = decompose(r)
    for _ in range(2):
        d = [rng.uniform(-50.0, -0.1) for _ in range(4)]
        b = [[d[i] if i == j else 0.0 for j in range(4)] for i in range(4)]
        out = mlf_matrix(b, f)
        for i in range(4):
            assert out[i][i] == pytest.approx(eval_scalar(r, -d[i]), abs=1e-10)


def test_similarity_covariance(approximants):
    rng = np.random.default_rng(20240917)
    r = approximants(0.5, 1.5, 7, 2)
    f = decompose(r)
    lam = np.array([-1.0, -2.0])
    for _ in range(5):
        v = rng.uniform(-1.0, 1.0, (2, 2)) + 2.0 * np.eye(2)
        cond = np.linalg.cond(v)
        b = v @ np.diag(lam) @ np.linalg.inv(v)
        got = np.array(mlf_matrix(b.tolist(), f))
        want = v @ np.diag([eval_scalar(r, 1.0), eval_scalar(r, 2.0)]) @ (
            np.linalg.inv(v)
        )
        assert np.max(np.abs(got - want)) <= 1e-8 * cond


def test_action_matches_full_function(approximants):
    rng = np.random.default_rng(7)
    f = decompose(approximants(0.5, 1.5, 7, 2))
    b = (-3.0 * np.eye(5) + 0.4 * rng.uniform(-1, 1, (5, 5))).tolist()
    rhs = rng.uniform(-1, 1, 5).tolist()
    full = np.array(mlf_matrix(b, f))
    vec = np.array(mlf_action(b, rhs, f))
    assert np.max(np.abs(full @ np.array(rhs) - vec)) <= 1e-12 * max(
        1.0, np.max(np.abs(vec))
    )


def test_eigen_decomposition_cross_check(approximants):
    # same rational function applied per eigenvalue, assembled back
    a1, a2 = 3.0, 1.0
    a = np.array([[0.0, 1.0, 0.0, 0.0],
                  [0.0, 0.0, 1.0, 0.0],
                  [0.0, 0.0, 0.0, 1.0],
                  [-a2, 0.0, 0.0, -a1]])
    f = decompose(approximants(0.5, 1.5, 7, 2))
    lam, v = np.linalg.eig(a)

    def rational(z):
        return sum(c / (-z - r) + np.conj(c) / (-z - np.conj(r))
                   for r, c in f.pairs)

    want = (v @ np.diag([rational(z) for z in lam]) @ np.linalg.inv(v))
    got = np.array(mlf_action(a.tolist(), [0.0, 0.0, 0.0, 1.0], f))
    ref = (want @ np.array([0.0, 0.0, 0.0, 1.0])).real
    assert np.max(np.abs(got - ref)) <= 1e-10 * max(1.0, np.max(np.abs(ref)))


def test_half_order_companion_action_vs_full(approximants):
    # the Bagley-Torvik system matrix at unit time: action on the last
    # unit vector agrees with the assembled full function
    a = [[0.0, 1.0, 0.0, 0.0],
         [0.0, 0.0, 1.0, 0.0],
         [0.0, 0.0, 0.0, 1.0],
         [-1.0, 0.0, 0.0, -3.0]]
    f = decompose(approximants(0.5, 1.5, 7, 2))
    e4 = [0.0, 0.0, 0.0, 1.0]
    vec = mlf_action(a, e4, f)
    full = mlf_matrix(a, f)
    for i in range(4):
        assert vec[i] == pytest.approx(full[i][3], abs=1e-12)


def test_zero_rhs_gives_zero_vector(approximants):
    f = decompose(approximants(0.5, 1.5, 7, 2))
    out = mlf_action([[-1.0, 0.0], [0.0, -2.0]], [0.0, 0.0], f)
    assert out == [0.0, 0.0]


def test_unconjugated_pole_sum_stays_real(approximants):
    # solve with all four shifts explicitly; the assembled result must be
    # real up to roundoff
    f = decompose(approximants(0.9, 1.9, 7, 2))
    b = [[-2.0, 0.3], [0.1, -1.0]]
    n = 2
    total = [[0j] * n for _ in range(n)]
    eye = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    for r, c in f.pairs:
        for shift, weight in ((r, c), (r.conjugate(), c.conjugate())):
            m = [[-complex(b[i][j]) - (shift if i == j else 0.0)
                  for j in range(n)] for i in range(n)]
            x = solve_complex(m, eye)
            for i in range(n):
                for j in range(n):
                    total[i][j] += weight * x[i][j]
    norm = max(abs(total[i][j]) for i in range(n) for j in range(n))
    imag = max(abs(total[i][j].imag) for i in range(n) for j in range(n))
    assert imag <= 1e-10 * norm
    direct = mlf_matrix(b, f)
    for i in range(n):
        for j in range(n):
            assert total[i][j].real == pytest.approx(direct[i][j], abs=1e-12)


def test_shift_collision_raises(approximants):
    f = decompose(approximants(0.5, 1.5, 7, 2))
    r0 = f.pairs[0][0]
    # 2x2 rotation-like block with spectrum of -B equal to the shift
    b = [[r0.real, r0.imag], [-r0.imag, r0.real]]
    with pytest.raises(SingularMatrix):
        mlf_action([[-v for v in row] for row in b], [1.0, 0.0], f)


def test_unpaired_form_rejected(approximants):
    f = decompose(approximants(0.5, 1.5, 7, 2))
    broken = PartialFractionForm(f.spec, f.pairs, False)
    with pytest.raises(PairingUnavailable):
        mlf_matrix([[-1.0]], broken)


def test_rhs_length_checked(approximants):
    f = decompose(approximants(0.5, 1.5, 7, 2))
    with pytest.raises(ValueError):
        mlf_action([[-1.0, 0.0], [0.0, -2.0]], [1.0], f)
