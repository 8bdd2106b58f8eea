"""Property-based checks over randomly drawn parameters.

Parameters are drawn as small-denominator rationals so the moment systems
can be solved exactly; every comparison against the closed forms is then
literal equality, not a tolerance.
"""

from fractions import Fraction as F

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mopoly import (
    JacobiPineiro,
    MopolyError,
    MultipleHermite,
    MultipleLaguerreFirst,
    MultipleLaguerreSecond,
    make_monic,
    oracle_polynomial,
    polynomial_via_recurrence,
    stepline_index,
    validate,
    zeros,
)
from mopoly.core import polyval, shift_scale

# denominators stay tiny: the exact solver cost grows with the bit size of
# the moment entries
fractions = st.fractions(min_value=F(-3, 4), max_value=F(3), max_denominator=8)
positive_fractions = st.fractions(min_value=F(-3, 4), max_value=F(3),
                                  max_denominator=8)


def _valid(spec):
    try:
        validate(spec)
    except MopolyError:
        return False
    return True


@st.composite
def single_interval_specs(draw):
    which = draw(st.sampled_from(["jp", "ml1", "ml2", "mh"]))
    if which == "jp":
        spec = JacobiPineiro(draw(fractions),
                             (draw(fractions), draw(fractions)))
    elif which == "ml1":
        spec = MultipleLaguerreFirst((draw(fractions), draw(fractions)))
    elif which == "ml2":
        spec = MultipleLaguerreSecond(draw(positive_fractions),
                                      (draw(fractions), draw(fractions)))
    else:
        spec = MultipleHermite((draw(fractions), draw(fractions)))
    assume(_valid(spec))
    return spec


@given(single_interval_specs(), st.integers(min_value=0, max_value=5))
@settings(max_examples=30, deadline=None)
def test_recurrence_agrees_with_moment_oracle(spec, N):
    lhs = polynomial_via_recurrence(spec, N, kind="rational")
    rhs = oracle_polynomial(spec, stepline_index(N), kind="rational")
    assert lhs.coeffs == rhs.coeffs


@given(single_interval_specs(), st.integers(min_value=3, max_value=8))
@settings(max_examples=25, deadline=None)
def test_zero_counts_and_support(spec, N):
    rep = zeros(spec, N)
    assert len(rep.zeros) == N
    assert all(a < b for a, b in zip(rep.zeros, rep.zeros[1:]))
    if isinstance(spec, JacobiPineiro):
        assert all(0 < x < 1 for x in rep.zeros)
    elif isinstance(spec, (MultipleLaguerreFirst, MultipleLaguerreSecond)):
        assert all(x > 0 for x in rep.zeros)


@given(st.lists(st.fractions(max_denominator=12), min_size=1, max_size=6),
       st.fractions(min_value=F(1, 4), max_value=F(4), max_denominator=6),
       st.fractions(min_value=F(-2), max_value=F(2), max_denominator=6),
       st.fractions(min_value=F(-3), max_value=F(3), max_denominator=6))
@settings(max_examples=30, deadline=None)
def test_shift_scale_is_composition(coeffs, u, v, x):
    q = shift_scale(coeffs, u, v)
    assert polyval(q, x) == polyval(coeffs, u * x + v)


@given(st.lists(st.fractions(max_denominator=10), min_size=2, max_size=6))
@settings(max_examples=30, deadline=None)
def test_make_monic_invariants(coeffs):
    assume(coeffs[-1] != 0)
    p = make_monic(coeffs, "rational")
    assert p.coeffs[-1] == 1
    assert len(p.coeffs) == len(coeffs)
    # same roots: original is the monic polynomial times its leading entry
    assert [c * coeffs[-1] for c in p.coeffs] == coeffs
