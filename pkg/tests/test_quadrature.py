"""Weight descriptors, moments, Gaussian and simultaneous rules."""

from fractions import Fraction as F

import mpmath
import pytest
from mpmath import mpf

from mopoly import (
    JacobiAngelesco,
    JacobiPineiro,
    LaguerreHermite,
    MonicPolynomial,
    MultiIndex,
    MultipleHermite,
    MultipleLaguerreFirst,
    MultipleLaguerreSecond,
    WeightDescriptor,
    gauss_rule,
    moment,
    normalized_moments,
    oracle_polynomial,
    orthogonality_residuals,
    simultaneous_rule,
    weights_of,
)

JP = JacobiPineiro(F(1, 2), (F(1, 3), F(3, 4)))
JA = JacobiAngelesco(-0.4375, 0.125, -0.5, 1.25)


def test_weight_shapes():
    ws = weights_of(JP)
    assert len(ws) == 2
    assert ws[0].support == (0.0, 1.0)
    assert ws[0].algebraic == ((0.0, F(1, 3)), (1.0, F(1, 2)))
    assert ws[1].algebraic[0] == (0.0, F(3, 4))
    assert ws[0].exponential == ("none",)

    ws = weights_of(JA)
    assert ws[0].support == (-0.4375, 0.0)
    assert ws[1].support == (0.0, 1.0)
    # both pieces carry the same three-point algebraic factor
    assert ws[0].algebraic == ws[1].algebraic

    ws = weights_of(LaguerreHermite(0.5))
    assert ws[0].support[0] == float("-inf")
    assert ws[1].support[1] == float("inf")
    assert ws[0].exponential == ("gauss", 0.0)

    ws = weights_of(MultipleHermite((F(-1, 2), F(2, 3))))
    assert ws[0].exponential == ("gauss", F(-1, 2))
    assert ws[1].exponential == ("gauss", F(2, 3))
    assert ws[0].algebraic == ()


def test_flat_moment_values():
    flat = WeightDescriptor((0.0, 1.0), (), ("none",))
    for k in range(5):
        assert abs(moment(flat, k) - mpf(1) / (k + 1)) < mpf("1e-55")


def test_moment_matches_beta_function():
    w = weights_of(JP)[0]  # x^(1/3) (1-x)^(1/2) on [0, 1]
    expected = mpmath.beta(mpf(4) / 3, mpf(3) / 2)
    assert abs(moment(w, 0) - expected) < mpf("1e-55")
    expected1 = mpmath.beta(mpf(7) / 3, mpf(3) / 2)
    assert abs(moment(w, 1) - expected1) < mpf("1e-55")


def test_normalized_moments_rational():
    # ratios of rising factorials, exact in Fraction arithmetic
    assert normalized_moments(JP, 1, 4, kind="rational") == [
        F(1), F(7, 13), F(77, 221), F(55, 221)]
    assert normalized_moments(JP, 0, 3, kind="rational") == [
        F(1), F(8, 17), F(112, 391)]
    ml1 = MultipleLaguerreFirst((F(1, 4), F(3, 4)))
    assert normalized_moments(ml1, 0, 3, kind="rational") == [
        F(1), F(5, 4), F(45, 16)]
    ml2 = MultipleLaguerreSecond(F(1, 2), (F(1), F(1, 3)))
    got = normalized_moments(ml2, 1, 3, kind="rational")
    assert got == [F(1), F(9, 2), F(135, 4)]


def test_gauss_rule_legendre_two_points():
    flat = WeightDescriptor((0.0, 1.0), (), ("none",))
    rule = gauss_rule(flat, 2)
    root3 = mpmath.sqrt(3)
    assert abs(rule.nodes[0] - (3 - root3) / 6) < mpf("1e-55")
    assert abs(rule.nodes[1] - (3 + root3) / 6) < mpf("1e-55")
    assert abs(rule.weights[0][0] - mpf(1) / 2) < mpf("1e-55")
    assert abs(rule.weights[0][1] - mpf(1) / 2) < mpf("1e-55")
    assert rule.exactness == (3,)


def test_gauss_rule_laguerre_one_point():
    lag = WeightDescriptor((0.0, mpmath.inf), (), ("exp", 1))
    rule = gauss_rule(lag, 1)
    assert abs(rule.nodes[0] - 1) < mpf("1e-55")
    assert abs(rule.weights[0][0] - 1) < mpf("1e-55")
    assert rule.exactness == (1,)


def test_gauss_rule_integrate_method():
    flat = WeightDescriptor((0.0, 1.0), (), ("none",))
    rule = gauss_rule(flat, 3)
    # degree 5 is within the certified exactness 2n - 1
    val = rule.integrate(lambda x: x**5)
    assert abs(val - mpf(1) / 6) < mpf("1e-55")


@pytest.mark.parametrize("n", [6, 7, 8])
def test_signed_modified_moments_piece(n):
    # the left two-interval piece mixes signs in its modified moments, which
    # trips a moment-recurrence variant that divides by the wrong pivot
    left = weights_of(JA)[0]
    rule = gauss_rule(left, n)
    for k in range(2 * n - 1):
        approx = rule.integrate(lambda x, k=k: x**k)
        assert abs(approx - moment(left, k)) < mpf("1e-40")


def test_oracle_polynomial_degree_one():
    p = oracle_polynomial(JP, MultiIndex((1, 0)), kind="rational")
    assert p.coeffs == (F(-8, 17), F(1))


def test_orthogonality_residuals_discriminates():
    nvec = MultiIndex((2, 1))
    good = orthogonality_residuals(JP, nvec, oracle_polynomial(JP, nvec))
    assert good < mpf("1e-50")
    mono = MonicPolynomial((mpf(0), mpf(0), mpf(0), mpf(1)), "extended")
    assert orthogonality_residuals(JP, nvec, mono) > mpf("1e-3")


def test_simultaneous_rule_angelesco():
    rule = simultaneous_rule(JA, MultiIndex((2, 2)))
    assert len(rule.nodes) == 4
    assert len(rule.weights) == 2
    assert rule.exactness == (5, 5)


def test_simultaneous_rule_pineiro_weights_integrate():
    nvec = MultiIndex((2, 1))
    rule = simultaneous_rule(JP, nvec)
    ws = weights_of(JP)
    # j-th weight vector reproduces the j-th measure's moments up to the
    # certified degree
    for j in (0, 1):
        for k in range(rule.exactness[j] + 1):
            approx = rule.integrate(lambda x, k=k: x**k, j=j)
            assert abs(approx - moment(ws[j], k)) < mpf("1e-45")
