import random
from fractions import Fraction

import pytest

from hooklab.exact import PolyQ, binomial
from hooklab.series import SeriesQt, series_from_rationals

F = Fraction


def test_construction_pads_and_truncates():
    s = SeriesQt(3, (1, 2))
    assert s.coeffs == (PolyQ((1,)), PolyQ((2,)), PolyQ(), PolyQ())
    t = SeriesQt(1, (1, 2, 3, 4))
    assert t.coeffs == (PolyQ((1,)), PolyQ((2,)))
    with pytest.raises(ValueError):
        SeriesQt(-1)


def test_basic_constructors():
    assert SeriesQt.one(2).coeffs == (PolyQ((1,)), PolyQ(), PolyQ())
    s = SeriesQt.x_power(4, 2, scale=F(1, 3))
    assert s.coefficient(2) == PolyQ((F(1, 3),))
    assert s.coefficient(0).is_zero()
    # monomials beyond the truncation vanish silently
    assert SeriesQt.x_power(2, 5) == SeriesQt(2)
    with pytest.raises(IndexError):
        s.coefficient(5)


def test_arithmetic():
    a = series_from_rationals(3, (1, 2, 3, 4))
    b = series_from_rationals(3, (1, -1, 0, 2))
    assert (a + b).specialize_t(0) == [2, 1, 3, 6]
    assert (a - b).specialize_t(0) == [0, 3, 3, 2]
    # (1 + 2x + 3x^2 + 4x^3)(1 - x + 2x^3) truncated at x^3
    assert (a * b).specialize_t(0) == [1, 1, 1, 3]
    assert (a * 2).specialize_t(0) == [2, 4, 6, 8]
    assert (a * PolyQ((0, 1))).coefficient(1) == PolyQ((0, 2))
    with pytest.raises(ValueError):
        a + series_from_rationals(2, (1,))


def test_log_and_exp_requirements():
    with pytest.raises(ValueError):
        series_from_rationals(2, (2, 1)).log()
    with pytest.raises(ValueError):
        series_from_rationals(2, (1, 1)).exp()


def test_exp_log_round_trip():
    s = SeriesQt(5, (PolyQ((1,)), PolyQ((1, 1)), PolyQ((0, 0, 2)), PolyQ((F(1, 2),)),
                     PolyQ((3, -1)), PolyQ((0, F(2, 7)))))
    assert s.log().exp() == s
    t = SeriesQt(5, (PolyQ(), PolyQ((1, -2)), PolyQ((F(1, 3),)), PolyQ((0, 5)),
                     PolyQ((2,)), PolyQ((1, 1, 1))))
    assert t.exp().log() == t


def test_exp_matches_exponential_series():
    x = SeriesQt.x_power(6, 1)
    e = x.exp()
    for n in range(7):
        assert e.coefficient(n) == PolyQ((F(1, [1, 1, 2, 6, 24, 120, 720][n]),))


def test_pow_affine_t_geometric():
    base = series_from_rationals(4, (1, -1))
    geom = base.pow_affine_t(-1, 0)
    assert geom.specialize_t(0) == [1, 1, 1, 1, 1]


def test_pow_affine_t_binomial_coefficients():
    # (1 - x)^(-t) has x^n coefficient C(t + n - 1, n)
    base = series_from_rationals(2, (1, -1))
    s = base.pow_affine_t(0, -1)
    assert s.coefficient(0) == PolyQ((1,))
    assert s.coefficient(1) == PolyQ((0, 1))
    assert s.coefficient(2) == PolyQ((0, F(1, 2), F(1, 2)))
    wide = series_from_rationals(8, (1, -1)).pow_affine_t(0, -1)
    for n in range(9):
        for t0 in range(6):
            assert wide.coefficient(n)(t0) == binomial(t0 + n - 1, n)


def test_pow_affine_t_rejects_t_in_base():
    s = SeriesQt(2, (PolyQ((1,)), PolyQ((0, 1))))
    with pytest.raises(ValueError):
        s.pow_affine_t(1, 0)


def test_pow_affine_t_specialization_commutes():
    rng = random.Random(20240817)
    base = series_from_rationals(8, (1, F(1, 2), -2, 0, F(3, 7), 1, -1, F(5, 3), 2))
    a, b = F(2, 3), F(-1, 2)
    lifted = base.pow_affine_t(a, b)
    for _ in range(10):
        t0 = F(rng.randint(-9, 9), rng.randint(1, 9))
        direct = base.pow_affine_t(a + b * t0, 0)
        assert lifted.specialize_t(t0) == direct.specialize_t(0)


def test_to_json_shape():
    s = SeriesQt(2, (PolyQ((1,)), PolyQ((0, 1)), PolyQ()))
    assert s.to_json() == {"truncation": 2, "coeffs": [["1"], ["0", "1"], ["0"]]}
