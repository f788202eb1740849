import pytest

from conftest import TEST_PAIRS
from mlpade.errors import InverseDomainError
from mlpade.gamma import rgamma
from mlpade.inverse import invert_fourth, invert_r32, residual
from mlpade.oracle import mlf_oracle
from mlpade.pade import _horner, eval_scalar
from mlpade.poly import Poly, roots


def oracle_inverse(alpha, beta, y, tol=1e-12):
    """Bisection against the oracle: the independent reference inverse."""
    lo, hi = 0.0, 1.0
    while mlf_oracle(alpha, beta, hi) > y:
        hi *= 4.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mlf_oracle(alpha, beta, mid) > y:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def test_top_of_domain_maps_to_zero(approximants):
    assert invert_r32(approximants(0.5, 1.0, 3, 2), 1.0) == 0.0
    assert invert_fourth(approximants(0.9, 1.9, 7, 2), rgamma(1.9)) == 0.0


def test_r32_round_trip_in_y(approximants):
    r = approximants(0.5, 1.0, 3, 2)
    for y in (0.2, 0.5, 0.9):
        x = invert_r32(r, y)
        assert eval_scalar(r, x) == pytest.approx(y, abs=1e-9)


def test_r32_equal_parameters_round_trip(approximants):
    r = approximants(0.5, 0.5, 3, 2)
    for x in (0.1, 1.0, 2.0, 5.0, 20.0):
        y = eval_scalar(r, x)
        assert invert_r32(r, y) == pytest.approx(x, rel=1e-9)


def test_r32_against_polynomial_root_finder(approximants):
    # independent route: clear denominators and hand the quadratic to the
    # generic root finder
    r = approximants(0.5, 1.0, 3, 2)
    y = 0.3
    g = r.scaling_constant * y
    quad = Poly((g * r.q[0] - r.p[1], g * r.q[1] - 1.0, g))
    candidates = [z.real for z in roots(quad).roots
                  if abs(z.imag) < 1e-10 and z.real > 0.0]
    assert len(candidates) == 1
    assert invert_r32(r, y) == pytest.approx(candidates[0], rel=1e-12)


def test_fourth_round_trip(approximants):
    r = approximants(0.9, 1.9, 7, 2)
    for x in (0.1, 1.0, 2.0, 5.0, 20.0):
        y = eval_scalar(r, x)
        assert invert_fourth(r, y) == pytest.approx(x, rel=1e-8)


def test_fourth_against_oracle_inverse(approximants):
    # deviation of the approximate inverse tracks the forward error
    r = approximants(0.6, 1.0, 7, 2)
    for y in (0.15, 0.4, 0.7, 0.95):
        x_ref = oracle_inverse(0.6, 1.0, y)
        x_app = invert_fourth(r, y)
        forward_rel = abs(eval_scalar(r, x_ref) - y) / y
        assert abs(x_app - x_ref) / max(x_ref, 1e-12) <= 10.0 * forward_rel + 1e-9


@pytest.mark.parametrize("pair", TEST_PAIRS)
def test_fourth_monotone_decreasing_and_unique_root(pair, approximants):
    # 50-point sweep: exactly one admissible root each time (any
    # multiplicity problem would raise), values strictly decreasing
    r = approximants(*pair, 7, 2)
    top = rgamma(pair[1])
    prev = None
    for i in range(50):
        y = top * (i + 0.5) / 50.0
        x = invert_fourth(r, y)
        if prev is not None:
            assert x < prev
        prev = x


@pytest.mark.parametrize("pair", TEST_PAIRS)
def test_fourth_residual_bound(pair, approximants):
    r = approximants(*pair, 7, 2)
    top = rgamma(pair[1])
    for i in range(50):
        y = top * (i + 0.5) / 50.0
        x = invert_fourth(r, y)
        assert residual(r, y, x) <= 1e-10 * (1.0 + abs(_horner(r.p, x)))


def test_domain_rejection(approximants):
    r7 = approximants(0.9, 1.9, 7, 2)
    with pytest.raises(InverseDomainError):
        invert_fourth(r7, 0.0)
    with pytest.raises(InverseDomainError):
        invert_fourth(r7, rgamma(1.9) * 1.01)
    r3 = approximants(0.5, 1.0, 3, 2)
    with pytest.raises(InverseDomainError):
        invert_r32(r3, -0.2)
    with pytest.raises(InverseDomainError):
        invert_r32(r3, 1.2)


def test_r32_requires_matching_type(approximants):
    with pytest.raises(ValueError):
        invert_r32(approximants(0.9, 1.9, 7, 2), 0.5)
    with pytest.raises(ValueError):
        invert_fourth(approximants(0.5, 1.0, 3, 2), 0.5)


def test_near_top_small_root(approximants):
    # just under the top of the domain the inverse is near zero
    r = approximants(0.6, 1.0, 7, 2)
    x = invert_fourth(r, 0.9999999)
    assert 0.0 < x < 1e-5
