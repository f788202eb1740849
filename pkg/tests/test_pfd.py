import json

import pytest

from conftest import ALL_TYPES, TEST_PAIRS, constructible, grid
from mlpade.errors import RealPositivePole, RepeatedPoles
from mlpade.gamma import gamma, rgamma
from mlpade.pade import RationalApproximant, eval_scalar, make_spec
from mlpade.pfd import decompose, eval_pfd, to_json_dict


def test_second_order_single_conjugate_pair(approximants):
    r = approximants(0.5, 1.0, 3, 2)
    # complex pair certified by the closed-form discriminant
    assert r.q[1] ** 2 - 4.0 * r.q[0] < 0.0
    f = decompose(r)
    assert f.pairing_ok and len(f.pairs) == 1
    assert f.pairs[0][0].imag > 0.0


def test_fourth_order_two_conjugate_pairs(approximants):
    f = decompose(approximants(0.5, 0.5, 7, 2))
    assert f.pairing_ok and len(f.pairs) == 2
    assert all(r.imag > 0.0 for r, _ in f.pairs)


def test_denominator_vanishes_at_extracted_poles(approximants):
    from mlpade.poly import Poly, eval_poly

    q = Poly(approximants(0.9, 1.9, 7, 2).q)
    for r, _ in decompose(approximants(0.9, 1.9, 7, 2)).pairs:
        assert abs(eval_poly(q, r)) <= 1e-10
        assert abs(eval_poly(q, r.conjugate())) <= 1e-10


def test_poles_off_positive_axis(approximants):
    for pair in TEST_PAIRS:
        for mn in ALL_TYPES:
            if not constructible(mn, pair):
                continue
            f = decompose(approximants(*pair, *mn))
            for r, _ in f.pairs:
                dist = abs(r.imag) if r.real >= 0.0 else abs(r)
                assert dist > 1e-8


def test_reconstruction_at_unit_point(approximants):
    r = approximants(0.9, 1.9, 7, 2)
    f = decompose(r)
    assert eval_pfd(f, 1.0) == pytest.approx(eval_scalar(r, 1.0), abs=1e-10)


def test_value_at_origin(approximants):
    for pair in ((0.9, 1.9), (0.5, 0.5), (1.0, 2.0)):
        f = decompose(approximants(*pair, 7, 2))
        assert eval_pfd(f, 0.0) == pytest.approx(rgamma(pair[1]), abs=1e-10)


def test_far_field_relative_agreement(approximants):
    r = approximants(0.9, 1.9, 7, 2)
    f = decompose(r)
    direct = eval_scalar(r, 1e6)
    assert eval_pfd(f, 1e6) == pytest.approx(direct, rel=1e-10)


def test_agreement_at_midrange_point(approximants):
    r = approximants(0.9, 1.9, 7, 2)
    f = decompose(r)
    assert eval_pfd(f, 5.0) == pytest.approx(eval_scalar(r, 5.0), abs=1e-10)


@pytest.mark.parametrize("pair", TEST_PAIRS)
@pytest.mark.parametrize("mn", ALL_TYPES)
def test_equivalence_with_direct_evaluation(pair, mn, approximants):
    if not constructible(mn, pair):
        pytest.skip("documented rejection: positive real denominator root")
    r = approximants(*pair, *mn)
    f = decompose(r)
    for x in grid(0.0, 100.0, 0.1):
        direct = eval_scalar(r, x)
        assert abs(eval_pfd(f, x) - direct) <= 1e-9 * (1.0 + abs(direct))


@pytest.mark.parametrize("pair", [p for p in TEST_PAIRS if p[1] > p[0]])
def test_residue_sum_fourth_order(pair, approximants):
    # degree structure forces sum of all residues onto the reciprocal of
    # the scaling constant
    f = decompose(approximants(*pair, 7, 2))
    total = sum(2.0 * c.real for _, c in f.pairs)
    want = 1.0 / gamma(pair[1] - pair[0]).value
    assert abs(total - want) <= 1e-10


def test_unconjugated_sum_is_real(approximants):
    # evaluate over all poles (both half-planes): imaginary parts cancel
    f = decompose(approximants(0.9, 1.0, 7, 2))
    for x in (0.0, 0.7, 13.0):
        full = sum(c / (x - r) + c.conjugate() / (x - r.conjugate())
                   for r, c in f.pairs)
        assert abs(full.imag) <= 1e-14 * max(1.0, abs(full.real))


def test_repeated_poles_guard():
    # hand-built object: q = (x^2 + 1)^2 has double roots
    spec = make_spec(0.9, 1.9, 7, 2)
    fake = RationalApproximant(
        spec, (0.0, 1.0, 0.0, 0.0, 1.0), (1.0, 0.0, 2.0, 0.0, 1.0), 1.0, 1.0
    )
    with pytest.raises(RepeatedPoles):
        decompose(fake)


def test_positive_real_pole_guard():
    # q = (x - 1)(x - 2)(x^2 + 1) has roots on the positive axis
    spec = make_spec(0.9, 1.9, 7, 2)
    q = (2.0, -3.0, 3.0, -3.0, 1.0)
    fake = RationalApproximant(spec, (0.0, 1.0, 0.0, 0.0, 1.0), q, 1.0, 1.0)
    with pytest.raises(RealPositivePole):
        decompose(fake)


def test_json_shape(approximants):
    doc = to_json_dict(decompose(approximants(0.9, 1.9, 7, 2)))
    assert doc["pairing_ok"] is True
    assert len(doc["pairs"]) == 2
    assert set(doc["pairs"][0]) == {"re_r", "im_r", "re_c", "im_c"}
    json.dumps(doc)
