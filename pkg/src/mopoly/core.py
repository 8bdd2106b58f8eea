"""Domain types, parameter validation, polynomial arithmetic, and scalar kinds.

Everything downstream (recurrences, explicit constructions, the moment
oracle, quadrature, spectra) works with the small vocabulary defined here:

* a family of weights (one of seven variants of :class:`FamilySpec`),
* a multi-index of orthogonality-condition counts (:class:`MultiIndex`),
* dense polynomials with coefficients in one of three scalar kinds
  (``double`` = machine floats, ``extended`` = mpmath floats with
  :data:`EXTENDED_DPS` significant digits, ``rational`` = exact fractions).

Polynomials are plain Python lists of coefficients in ascending monomial
order; :class:`MonicPolynomial` wraps a finished, exactly-monic result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf

# Working precision of the "extended" scalar kind.  Cross-checks between
# independent constructions compare at 1e-10 .. 1e-20; coefficient growth
# for degrees up to ~30 eats at most ~15 digits, so 60 leaves a wide margin.
EXTENDED_DPS = 60
mpmath.mp.dps = EXTENDED_DPS

SCALAR_KINDS = ("double", "extended", "rational")


# ---------------------------------------------------------------------------
# errors

class MopolyError(Exception):
    """Base class for all library errors."""


class ParameterOutOfRange(MopolyError):
    """A weight parameter violates its integrability/sign constraint."""


class DegenerateSystem(MopolyError):
    """Parameters make the weights fail to form an AT/Angelesco system."""


class ScalarKindMismatch(MopolyError):
    """Polynomial operands carry incompatible scalar kinds."""


class UnsupportedFamily(MopolyError):
    """The operation is not defined for this family."""


class UnsupportedMultiplicity(MopolyError):
    """Closed forms exist only for two-weight (r = 2) systems."""


class SingularMomentMatrix(MopolyError):
    """The moment system of the oracle is (numerically) rank deficient."""


class EigenFailure(MopolyError):
    """The eigenvalue iteration did not converge."""


class SpuriousComplexPair(MopolyError):
    """An eigenvalue kept a non-negligible imaginary part."""


class NonIntegrable(MopolyError):
    """A requested moment does not exist."""


class UnsupportedWeightShape(MopolyError):
    """No Gauss rule is available for this weight shape."""


class IllConditionedVandermonde(MopolyError):
    """Simultaneous-rule weights could not be computed stably."""


# ---------------------------------------------------------------------------
# scalar kinds

def scalar(x, kind):
    """Convert a number to the requested scalar kind.

    Rational conversion is exact for ints, floats (binary rationals) and
    Fractions; converting an mpf to rational is refused since downstream
    code never needs it.
    """
    if kind == "double":
        return float(x)
    if kind == "extended":
        if isinstance(x, Fraction):
            return mpf(x.numerator) / mpf(x.denominator)
        return mpf(x)
    if kind == "rational":
        if isinstance(x, mpf):
            raise ScalarKindMismatch("cannot convert extended float to exact rational")
        return Fraction(x)
    raise ValueError("unknown scalar kind %r" % (kind,))


def scalar_zero(kind):
    return scalar(0, kind)


def scalar_one(kind):
    return scalar(1, kind)


def kind_of(value):
    """Scalar kind of a single coefficient; ints are kind-neutral (None)."""
    if isinstance(value, Fraction):
        return "rational"
    if isinstance(value, mpf):
        return "extended"
    if isinstance(value, float):
        return "double"
    if isinstance(value, int):
        return None
    raise ScalarKindMismatch("unsupported coefficient type %r" % type(value))


def coeffs_kind(coeffs):
    """Common scalar kind of a coefficient list (None if all ints)."""
    kind = None
    for c in coeffs:
        k = kind_of(c)
        if k is None:
            continue
        if kind is None:
            kind = k
        elif kind != k:
            raise ScalarKindMismatch("mixed scalar kinds %s and %s" % (kind, k))
    return kind


def _check_compatible(*coeff_lists):
    kinds = {k for k in (coeffs_kind(c) for c in coeff_lists) if k is not None}
    if len(kinds) > 1:
        raise ScalarKindMismatch("mixed scalar kinds %s" % sorted(kinds))


def convert_coeffs(coeffs, kind):
    return [scalar(c, kind) for c in coeffs]


# ---------------------------------------------------------------------------
# multi-indices

@dataclass(frozen=True)
class MultiIndex:
    """Multi-index (n_1, ..., n_r) of orthogonality-condition counts."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(n) for n in self.entries)
        if len(entries) < 1:
            raise ValueError("multi-index needs at least one entry")
        if any(n < 0 for n in entries):
            raise ValueError("multi-index entries must be nonnegative")
        object.__setattr__(self, "entries", entries)

    @property
    def r(self):
        return len(self.entries)

    @property
    def length(self):
        return sum(self.entries)


def stepline_index(N, r=2):
    """Nearly diagonal multi-index of total degree N: (k+1,...,k+1,k,...,k)."""
    if N < 0:
        raise ValueError("degree must be nonnegative")
    k, j = divmod(N, r)
    return MultiIndex((k + 1,) * j + (k,) * (r - j))


# ---------------------------------------------------------------------------
# family specifications

@dataclass(frozen=True)
class JacobiPineiro:
    """Weights x^{alpha_i} (1-x)^{alpha0} on [0,1] (AT system)."""

    alpha0: float
    alphas: tuple

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))

    @property
    def r(self):
        return len(self.alphas)


@dataclass(frozen=True)
class MultipleLaguerreFirst:
    """Weights x^{alpha_j} e^{-x} on [0,inf) (AT system)."""

    alphas: tuple

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))

    @property
    def r(self):
        return len(self.alphas)


@dataclass(frozen=True)
class MultipleLaguerreSecond:
    """Weights x^{alpha0} e^{-c_j x} on [0,inf) (AT system)."""

    alpha0: float
    cs: tuple

    def __post_init__(self):
        object.__setattr__(self, "cs", tuple(self.cs))

    @property
    def r(self):
        return len(self.cs)


@dataclass(frozen=True)
class MultipleHermite:
    """Weights e^{-x^2 + c_j x} on the real line (AT system)."""

    cs: tuple

    def __post_init__(self):
        object.__setattr__(self, "cs", tuple(self.cs))

    @property
    def r(self):
        return len(self.cs)


@dataclass(frozen=True)
class JacobiAngelesco:
    """Weight |x-a|^alpha |x|^beta |1-x|^gamma on [a,0] and [0,1], a < 0."""

    a: float
    alpha: float
    beta: float
    gamma: float

    @property
    def r(self):
        return 2


@dataclass(frozen=True)
class JacobiLaguerre:
    """Weight |x-a|^alpha |x|^beta e^{-x} on [a,0] and [0,inf), a < 0."""

    a: float
    alpha: float
    beta: float

    @property
    def r(self):
        return 2


@dataclass(frozen=True)
class LaguerreHermite:
    """Weight |x|^beta e^{-x^2} on (-inf,0] and [0,inf)."""

    beta: float

    @property
    def r(self):
        return 2


AT_FAMILIES = (JacobiPineiro, MultipleLaguerreFirst, MultipleLaguerreSecond,
               MultipleHermite)
ANGELESCO_FAMILIES = (JacobiAngelesco, JacobiLaguerre, LaguerreHermite)

# Tolerances fixed here so validation is deterministic.
INTEGER_GAP_TOL = 1e-9     # distance of alpha_i - alpha_j to nearest integer
RATE_GAP_TOL = 1e-12       # relative separation of exponential rates/drifts


def _require_exponent(value, name):
    if not value > -1:
        raise ParameterOutOfRange("%s must be > -1, got %r" % (name, value))


def _require_noninteger_gaps(alphas):
    for i in range(len(alphas)):
        for j in range(i + 1, len(alphas)):
            diff = float(alphas[i]) - float(alphas[j])
            if abs(diff - round(diff)) <= INTEGER_GAP_TOL:
                raise DegenerateSystem(
                    "alpha_%d - alpha_%d = %r is within %g of an integer"
                    % (i + 1, j + 1, diff, INTEGER_GAP_TOL))


def validate(spec):
    """Check the family parameters; return the spec unchanged if valid."""
    if isinstance(spec, JacobiPineiro):
        _require_exponent(spec.alpha0, "alpha0")
        for i, a in enumerate(spec.alphas):
            _require_exponent(a, "alphas[%d]" % i)
        _require_noninteger_gaps(spec.alphas)
    elif isinstance(spec, MultipleLaguerreFirst):
        for i, a in enumerate(spec.alphas):
            _require_exponent(a, "alphas[%d]" % i)
        _require_noninteger_gaps(spec.alphas)
    elif isinstance(spec, MultipleLaguerreSecond):
        _require_exponent(spec.alpha0, "alpha0")
        for i, c in enumerate(spec.cs):
            if not c > 0:
                raise ParameterOutOfRange("cs[%d] must be > 0, got %r" % (i, c))
        cs = [float(c) for c in spec.cs]
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                if abs(cs[i] - cs[j]) <= RATE_GAP_TOL * max(abs(cs[i]), abs(cs[j])):
                    raise DegenerateSystem("rates c_%d and c_%d coincide" % (i + 1, j + 1))
    elif isinstance(spec, MultipleHermite):
        cs = [float(c) for c in spec.cs]
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                if abs(cs[i] - cs[j]) <= RATE_GAP_TOL * max(1.0, abs(cs[i]), abs(cs[j])):
                    raise DegenerateSystem("drifts c_%d and c_%d coincide" % (i + 1, j + 1))
    elif isinstance(spec, JacobiAngelesco):
        if not spec.a < 0:
            raise ParameterOutOfRange("a must be negative, got %r" % (spec.a,))
        _require_exponent(spec.alpha, "alpha")
        _require_exponent(spec.beta, "beta")
        _require_exponent(spec.gamma, "gamma")
    elif isinstance(spec, JacobiLaguerre):
        if not spec.a < 0:
            raise ParameterOutOfRange("a must be negative, got %r" % (spec.a,))
        _require_exponent(spec.alpha, "alpha")
        _require_exponent(spec.beta, "beta")
    elif isinstance(spec, LaguerreHermite):
        _require_exponent(spec.beta, "beta")
    else:
        raise UnsupportedFamily("not a family spec: %r" % (spec,))
    if spec.r < 1:
        raise DegenerateSystem("at least one weight is required")
    return spec


# ---------------------------------------------------------------------------
# dense polynomial arithmetic (ascending coefficient lists)

def padd(p, q):
    _check_compatible(p, q)
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else 0
        b = q[i] if i < len(q) else 0
        out.append(a + b)
    return out


def psub(p, q):
    return padd(p, pscale(q, -1))


def pscale(p, s):
    _check_compatible(p, [s])
    return [s * c for c in p]


def pmul(p, q):
    _check_compatible(p, q)
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def pder(p):
    return [i * c for i, c in enumerate(p)][1:] if len(p) > 1 else [0 * p[0]]


def polyval(p, x):
    acc = 0 * x
    for c in reversed(p):
        acc = acc * x + c
    return acc


def ptrim(p):
    """Drop trailing (highest-order) exact zeros, keeping at least one entry."""
    n = len(p)
    while n > 1 and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def shift_scale(p, u, v):
    """Coefficients of x -> p(u*x + v), exact in the scalar kind of p."""
    _check_compatible(p, [u], [v])
    out = [p[-1]]
    for c in reversed(p[:-1]):
        # out <- out*(u*x + v) + c
        nxt = [v * out[0] + c]
        for i in range(1, len(out)):
            nxt.append(u * out[i - 1] + v * out[i])
        nxt.append(u * out[-1])
        out = nxt
    return out


# ---------------------------------------------------------------------------
# monic polynomials

@dataclass(frozen=True)
class MonicPolynomial:
    """Dense polynomial with leading coefficient exactly 1."""

    coeffs: tuple
    kind: str

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("empty coefficient list")
        if coeffs[-1] != 1:
            raise ValueError("polynomial is not monic: leading %r" % (coeffs[-1],))
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        return polyval(self.coeffs, x)


def make_monic(coeffs, kind):
    """Normalize by the leading coefficient and pin it to an exact 1."""
    coeffs = ptrim(convert_coeffs(coeffs, kind))
    lead = coeffs[-1]
    if lead == 0:
        raise ValueError("zero polynomial cannot be monic")
    if lead != 1:
        coeffs = [c / lead for c in coeffs]
    coeffs[-1] = scalar_one(kind)
    return MonicPolynomial(tuple(coeffs), kind)
