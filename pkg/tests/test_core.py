"""Scalar kinds, family specs, and exact polynomial helpers."""

from fractions import Fraction as F

import pytest
from mpmath import mpf

from mopoly import (
    DegenerateSystem,
    JacobiAngelesco,
    JacobiPineiro,
    LaguerreHermite,
    MonicPolynomial,
    MultiIndex,
    MultipleHermite,
    MultipleLaguerreFirst,
    MultipleLaguerreSecond,
    ParameterOutOfRange,
    ScalarKindMismatch,
    make_monic,
    stepline_index,
    validate,
)
from mopoly.core import (
    coeffs_kind,
    convert_coeffs,
    kind_of,
    pder,
    pmul,
    polyval,
    pscale,
    psub,
    scalar,
    shift_scale,
)


def test_scalar_conversions():
    assert scalar(F(1, 2), "double") == 0.5
    assert scalar(0.5, "rational") == F(1, 2)
    assert scalar(3, "extended") == mpf(3)
    # binary floats convert to rationals exactly
    assert scalar(0.1, "rational") == F(0.1)


def test_scalar_refuses_mpf_to_rational():
    with pytest.raises(ScalarKindMismatch):
        scalar(mpf("0.5"), "rational")


def test_kind_detection():
    assert kind_of(F(1, 3)) == "rational"
    assert kind_of(1.25) == "double"
    assert kind_of(mpf(2)) == "extended"
    assert coeffs_kind([F(0), F(1)]) == "rational"


def test_convert_coeffs_roundtrip():
    p = [F(1, 3), F(-2), F(1)]
    d = convert_coeffs(p, "double")
    assert all(isinstance(c, float) for c in d)
    assert d[1] == -2.0


def test_stepline_index():
    assert stepline_index(0).entries == (0, 0)
    assert stepline_index(1).entries == (1, 0)
    assert stepline_index(4).entries == (2, 2)
    assert stepline_index(7).entries == (4, 3)
    assert stepline_index(5, r=3).entries == (2, 2, 1)


def test_multi_index():
    idx = MultiIndex((3, 2))
    assert idx.r == 2
    assert idx.length == 5


def test_validate_accepts_reference_specs():
    validate(JacobiPineiro(F(1, 2), (F(1, 3), F(3, 4))))
    validate(MultipleLaguerreFirst((F(1, 4), F(3, 4))))
    validate(MultipleLaguerreSecond(F(1, 2), (F(1), F(1, 3))))
    validate(MultipleHermite((F(-1, 2), F(2, 3))))
    validate(JacobiAngelesco(-0.4375, 0.125, -0.5, 1.25))
    validate(LaguerreHermite(0.5))


def test_validate_rejects_integer_gap():
    # alpha1 - alpha2 in Z makes the moment system singular
    with pytest.raises(DegenerateSystem):
        validate(JacobiPineiro(F(1, 2), (F(1, 3), F(4, 3))))
    with pytest.raises(DegenerateSystem):
        validate(MultipleLaguerreFirst((F(1, 4), F(1, 4))))


def test_validate_rejects_bad_ranges():
    with pytest.raises(ParameterOutOfRange):
        validate(JacobiPineiro(F(-3, 2), (F(1, 3), F(3, 4))))
    with pytest.raises(ParameterOutOfRange):
        validate(JacobiAngelesco(0.5, 0.0, 0.0, 0.0))  # a must be negative
    with pytest.raises(DegenerateSystem):
        validate(MultipleLaguerreSecond(F(1, 2), (F(1), F(1))))


def test_polyval_and_derivative():
    p = [F(1), F(-3), F(2)]  # 2x^2 - 3x + 1
    assert polyval(p, F(2)) == F(3)
    assert pder(p) == [F(-3), F(4)]


def test_pmul_pscale_psub():
    a = [F(1), F(1)]
    b = [F(-1), F(1)]
    assert pmul(a, b) == [F(-1), F(0), F(1)]
    assert pscale(a, F(3)) == [F(3), F(3)]
    assert psub(a, b) == [F(2), F(0)]


def test_shift_scale_exact():
    p = [F(1), F(0), F(1)]  # x^2 + 1
    q = shift_scale(p, F(2), F(-1))  # (2x-1)^2 + 1
    assert q == [F(2), F(-4), F(4)]


def test_shift_scale_rejects_mixed_kinds():
    with pytest.raises(ScalarKindMismatch):
        shift_scale([F(1), F(1)], 0.5, F(0))


def test_make_monic():
    p = make_monic([F(2), F(4)], "rational")
    assert isinstance(p, MonicPolynomial)
    assert p.coeffs == (F(1, 2), F(1))
    assert p.kind == "rational"


def test_monic_requires_unit_lead():
    with pytest.raises(ValueError):
        MonicPolynomial((F(1), F(2)), "rational")
