import random

import pytest
from hypothesis import given, settings, strategies as st

from mlpade.poly import Poly, conjugate_pairs, derivative, eval_poly, roots


def test_eval_linear():
    assert eval_poly(Poly((1.0, 2.0)), 3.0) == 7.0


def test_eval_at_root():
    assert eval_poly(Poly((1.0, 0.0, 1.0)), 1j) == 0.0


def test_derivative_square():
    assert derivative(Poly((0.0, 0.0, 1.0))).coeffs == (0.0, 2.0)


def test_derivative_constant():
    assert derivative(Poly((5.0,))).coeffs == (0.0,)


def test_derivative_monic_quartic():
    q = Poly((2.0, 3.0, 4.0, 5.0, 1.0))
    assert derivative(q).coeffs == (3.0, 8.0, 15.0, 4.0)


def test_roots_pure_imaginary_pair():
    rs = roots(Poly((1.0, 0.0, 1.0))).roots
    assert sorted(z.imag for z in rs) == pytest.approx([-1.0, 1.0], abs=1e-14)
    assert all(abs(z.real) < 1e-14 for z in rs)


def test_roots_constructed_quartic():
    # (x-1)(x-2)(x-3)(x-4) = 24 - 50x + 35x^2 - 10x^3 + x^4
    rs = roots(Poly((24.0, -50.0, 35.0, -10.0, 1.0))).roots
    got = sorted(z.real for z in rs)
    assert got == pytest.approx([1.0, 2.0, 3.0, 4.0], abs=1e-10)
    assert all(abs(z.imag) < 1e-10 for z in rs)


def test_roots_cubic():
    rs = roots(Poly((-6.0, 11.0, -6.0, 1.0))).roots
    assert sorted(z.real for z in rs) == pytest.approx([1.0, 2.0, 3.0], abs=1e-11)


def test_roots_rejects_degree_zero_and_five():
    with pytest.raises(ValueError):
        roots(Poly((1.0,)))
    with pytest.raises(ValueError):
        roots(Poly((1.0, 1.0, 1.0, 1.0, 1.0, 1.0)))


def test_residual_bound_reported():
    p = Poly((24.0, -50.0, 35.0, -10.0, 1.0))
    rs = roots(p)
    scale = 1.0 + max(abs(c) for c in p.coeffs)
    assert rs.residual_bound <= 1e-10 * scale
    assert max(abs(eval_poly(p, r)) for r in rs.roots) <= rs.residual_bound + 1e-300


def test_vieta_random_quartics():
    random.seed(7)
    for _ in range(200):
        c = [random.uniform(-10.0, 10.0) for _ in range(4)] + [1.0]
        rs = roots(Poly(tuple(c))).roots
        total = sum(rs)
        prod = 1.0 + 0.0j
        for z in rs:
            prod *= z
        assert abs(total - (-c[3])) <= 1e-10 * max(1.0, abs(c[3]))
        assert abs(prod - c[0]) <= 1e-10 * max(1.0, abs(c[0]))


def test_conjugate_closure_real_coefficients():
    random.seed(11)
    for _ in range(100):
        c = [random.uniform(-10.0, 10.0) for _ in range(4)] + [1.0]
        rs = roots(Poly(tuple(c))).roots
        for z in rs:
            if abs(z.imag) > 1e-8 * (1.0 + abs(z)):
                mates = [w for w in rs if abs(w - z.conjugate()) <=
                         1e-12 * (1.0 + abs(z))]
                assert mates, f"no conjugate mate for {z}"


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(min_value=-8.0, max_value=8.0), min_size=2, max_size=4))
def test_roots_satisfy_polynomial(cs):
    coeffs = tuple(cs) + (1.0,)
    p = Poly(coeffs)
    rs = roots(p)
    scale = sum(abs(c) for c in coeffs)
    for z in rs.roots:
        terms = sum(abs(c) * abs(z) ** k for k, c in enumerate(coeffs))
        assert abs(eval_poly(p, z)) <= 1e-11 * max(terms, scale)


def test_conjugate_pairs_grouping():
    zs = [1 + 2j, 1 - 2j, -3 + 1j, -3 - 1j]
    pairs, ok = conjugate_pairs(zs)
    assert ok
    assert sorted((z.real, z.imag) for z in pairs) == [(-3.0, 1.0), (1.0, 2.0)]


def test_conjugate_pairs_fails_on_lone_real_root():
    pairs, ok = conjugate_pairs([2.0 + 0j, 1 + 1j, 1 - 1j])
    assert not ok
