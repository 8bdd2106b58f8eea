"""Polynomial construction routes and the identities linking them.

Every stepline polynomial can be built two independent ways: by running
the four-term recurrence, or from an explicit double-sum formula.  This
module provides both, the classical one-weight polynomials the families
degenerate into, the closed-form subleading coefficients, the first-order
raising identities, and scaled limit checks connecting the families.

Explicit sums are evaluated in exact rational arithmetic whenever the
parameters are exactly rational (ints, floats, Fractions), so equality
tests against the moment-system oracle can be bitwise.  Binomials with
real upper argument are falling-factorial products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf

from .core import (
    EXTENDED_DPS,
    JacobiAngelesco,
    JacobiLaguerre,
    JacobiPineiro,
    LaguerreHermite,
    MonicPolynomial,
    MultiIndex,
    MultipleHermite,
    MultipleLaguerreFirst,
    MultipleLaguerreSecond,
    ParameterOutOfRange,
    ScalarKindMismatch,
    UnsupportedFamily,
    UnsupportedMultiplicity,
    make_monic,
    padd,
    pder,
    pmul,
    pscale,
    psub,
    scalar,
    scalar_one,
    shift_scale,
    validate,
)
from .recurrence import _jp_A, stepline_coeffs, x_moment_ratio


# ---------------------------------------------------------------------------
# low-level helpers

def _lift(params):
    """Common arithmetic domain: exact Fractions if possible, else mpf."""
    if any(isinstance(p, mpf) for p in params):
        return [mpf(p) if not isinstance(p, Fraction)
                else mpf(p.numerator) / mpf(p.denominator) for p in params], False
    return [Fraction(p) for p in params], True


def _binom(t, k):
    """binom(t, k) for real t and integer k >= 0, as a falling factorial."""
    num = t * 0 + 1
    for i in range(k):
        num = num * (t - i)
    return num / math.factorial(k)


def _require_exponent(value, name):
    if not value > -1:
        raise ParameterOutOfRange("%s must be > -1, got %r" % (name, value))


def _check_degree(n, name="degree"):
    n = int(n)
    if n < 0:
        raise ValueError("%s must be nonnegative" % name)
    return n


def _pair(indices):
    if isinstance(indices, MultiIndex):
        indices = indices.entries
    if isinstance(indices, int):
        raise ValueError("expected a pair of indices")
    n, m = (int(v) for v in indices)
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    return n, m


def _single(indices):
    if isinstance(indices, int):
        return _check_degree(indices)
    (n,) = tuple(indices)
    return _check_degree(n)


# ---------------------------------------------------------------------------
# stepline polynomials by running the recurrence

def polynomial_via_recurrence(spec, N, kind="double"):
    """Monic stepline polynomial of degree N built from (b_n, c_n, d_n)."""
    validate(spec)
    N = _check_degree(N)
    one = scalar_one(kind)
    if N == 0:
        stepline_coeffs(spec, 0, kind=kind)  # surface kind/family errors early
        return MonicPolynomial((one,), kind)
    prev2, prev1, cur = None, None, [one]
    for k in range(N):
        b, c, d = stepline_coeffs(spec, k, kind=kind)
        nxt = [scalar(0, kind)] + cur                 # x * p_k
        nxt = psub(nxt, pscale(cur, b))
        if prev1 is not None and c != 0:
            nxt = psub(nxt, pscale(prev1, c))
        if prev2 is not None and d != 0:
            nxt = psub(nxt, pscale(prev2, d))
        prev2, prev1, cur = prev1, cur, nxt
    cur[-1] = one  # leading coefficient is 1 by construction; pin it exactly
    return MonicPolynomial(tuple(cur), kind)


# ---------------------------------------------------------------------------
# classical one-weight polynomials (monic)

def _xm1_powers(top):
    """[ (x-1)^t for t in 0..top ] in int arithmetic."""
    out = [[1]]
    for _ in range(top):
        out.append(pmul(out[-1], [-1, 1]))
    return out


def _classical_jacobi_sum(al, be, n):
    pw = _xm1_powers(n)
    S = [al * 0] * (n + 1)
    for j in range(n + 1):
        c = _binom(be + n, j) * _binom(al + n, n - j)
        base = pw[j]
        for i, v in enumerate(base):
            S[i + (n - j)] += c * v
    return S


def classical_jacobi(alpha, beta, n, kind="double"):
    """Monic Jacobi polynomial on [0,1] for the weight x^beta (1-x)^alpha."""
    _require_exponent(alpha, "alpha")
    _require_exponent(beta, "beta")
    n = _check_degree(n)
    (al, be), _ = _lift([alpha, beta])
    with mpmath.workdps(EXTENDED_DPS + 10):
        return make_monic(_classical_jacobi_sum(al, be, n), kind)


def _classical_laguerre_coeffs(al, n):
    f = math.factorial
    return [(-1) ** (n + k) * Fraction(f(n), f(k)) * _binom(al + n, n - k)
            for k in range(n + 1)]


def classical_laguerre(alpha, n, kind="double"):
    """Monic Laguerre polynomial for the weight x^alpha e^{-x} on [0,inf)."""
    _require_exponent(alpha, "alpha")
    n = _check_degree(n)
    (al,), _ = _lift([alpha])
    with mpmath.workdps(EXTENDED_DPS + 10):
        return make_monic(_classical_laguerre_coeffs(al, n), kind)


def _classical_hermite_coeffs(n):
    f = math.factorial
    out = [Fraction(0)] * (n + 1)
    for m in range(n // 2 + 1):
        out[n - 2 * m] = (Fraction(f(n), f(m) * f(n - 2 * m))
                          * Fraction(-1, 4) ** m)
    return out


def classical_hermite(n, kind="double"):
    """Monic Hermite polynomial for the weight e^{-x^2} on the real line."""
    n = _check_degree(n)
    return make_monic(_classical_hermite_coeffs(n), kind)


# ---------------------------------------------------------------------------
# explicit double sums

def _jp_sum(a0, a1, a2, n, m):
    """Unnormalized (n,m) polynomial for weights x^{a_i}(1-x)^{a0} on [0,1]."""
    pw = _xm1_powers(n + m)
    S = [a0 * 0] * (n + m + 1)
    for k in range(n + 1):
        ck = _binom(a1 + n, k) * _binom(a0 + m + n, n - k)
        for j in range(m + 1):
            c = ck * _binom(a2 + n + m - k, j) * _binom(a0 + k + m, m - j)
            base = pw[k + j]
            off = n + m - k - j
            for i, v in enumerate(base):
                S[i + off] += c * v
    return S


def jacobi_pineiro_explicit(alpha0, alpha1, alpha2, n, m, kind="double"):
    """Monic (n,m) polynomial for the weights x^{alpha_i}(1-x)^{alpha0}."""
    for name, v in (("alpha0", alpha0), ("alpha1", alpha1), ("alpha2", alpha2)):
        _require_exponent(v, name)
    n, m = _check_degree(n), _check_degree(m, "second index")
    (a0, a1, a2), _ = _lift([alpha0, alpha1, alpha2])
    with mpmath.workdps(EXTENDED_DPS + 10):
        return make_monic(_jp_sum(a0, a1, a2, n, m), kind)


def _ja_sum(al, be, ga, a, n):
    """Unnormalized diagonal (n,n) polynomial for |x-a|^al |x|^be |1-x|^ga."""
    pw1 = _xm1_powers(2 * n)
    pwa = [[a * 0 + 1]]
    for _ in range(n):
        pwa.append(pmul(pwa[-1], [-a, 1]))
    S = [a * 0] * (2 * n + 1)
    for k in range(n + 1):
        ck = _binom(al + n, k)
        for j in range(n - k + 1):
            c = ck * _binom(be + n, j) * _binom(ga + n, n - k - j)
            term = pmul(pwa[n - k], pw1[k + j])
            off = n - j
            for i, v in enumerate(term):
                S[i + off] += c * v
    return S


def jacobi_angelesco_explicit(alpha, beta, gamma, a, n, kind="double"):
    """Monic diagonal (n,n) polynomial for |x-a|^alpha |x|^beta |1-x|^gamma."""
    if not a < 0:
        raise ParameterOutOfRange("a must be negative, got %r" % (a,))
    for name, v in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        _require_exponent(v, name)
    n = _check_degree(n)
    (al, be, ga, aa), _ = _lift([alpha, beta, gamma, a])
    with mpmath.workdps(EXTENDED_DPS + 10):
        return make_monic(_ja_sum(al, be, ga, aa, n), kind)


def _ja_offdiag_ratio(al, be, ga, n):
    # (s+2n+1)/(s+3n+1) with s = al+be+ga; the n = 0 case is exactly 1 and
    # must not be evaluated as a ratio since s+1 can vanish
    if n == 0:
        return 1
    s = al + be + ga
    return (s + 2 * n + 1) / (s + 3 * n + 1)


def jacobi_angelesco_offdiagonal(alpha, beta, gamma, a, n, kind="extended"):
    """Monic (n+1,n) polynomial, built from two diagonal constructions.

    P_{n+1,n} = x P_{n,n}[beta+1] - X_n (s+2n+1)/(s+3n+1) P_{n,n}, where
    P_{n,n}[beta+1] shifts only the middle exponent and X_n is the
    first-moment ratio of the left interval.  Contains the irrational X_n,
    so exact rational output is refused.
    """
    if kind == "rational":
        raise ScalarKindMismatch(
            "the (n+1,n) polynomial contains the irrational ratio X_n")
    if not a < 0:
        raise ParameterOutOfRange("a must be negative, got %r" % (a,))
    for name, v in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        _require_exponent(v, name)
    n = _check_degree(n)
    spec = JacobiAngelesco(a=float(a), alpha=float(alpha), beta=float(beta),
                           gamma=float(gamma))
    X = x_moment_ratio(spec, n)
    (al, be, ga, aa), _ = _lift([alpha, beta, gamma, a])
    with mpmath.workdps(EXTENDED_DPS + 10):
        up = _ja_sum(al, be + 1, ga, aa, n)
        up = [c / up[-1] for c in up]
        base = _ja_sum(al, be, ga, aa, n)
        base = [c / base[-1] for c in base]
        ratio = _ja_offdiag_ratio(al, be, ga, n)
        fac = X * scalar(ratio, "extended")
        coeffs = psub([mpf(0)] + [scalar(c, "extended") for c in up],
                      pscale([scalar(c, "extended") for c in base], fac))
        return make_monic(coeffs, kind)


def _jl_sum(al, be, a, n):
    """Monic diagonal (n,n) polynomial for |x-a|^al |x|^be e^{-x}."""
    f = math.factorial
    pwa = [[a * 0 + 1]]
    for _ in range(n):
        pwa.append(pmul(pwa[-1], [-a, 1]))
    S = [a * 0] * (2 * n + 1)
    for k in range(n + 1):
        ck = _binom(al + n, k) * (-1) ** k
        for j in range(n - k + 1):
            c = (ck * _binom(be + n, j) * (-1) ** j
                 * Fraction(f(n), f(n - k - j)))
            off = n - j
            for i, v in enumerate(pwa[n - k]):
                S[i + off] += c * v
    return S


def jacobi_laguerre_explicit(alpha, beta, a, n, kind="double"):
    """Monic diagonal (n,n) polynomial for |x-a|^alpha |x|^beta e^{-x}."""
    if not a < 0:
        raise ParameterOutOfRange("a must be negative, got %r" % (a,))
    for name, v in (("alpha", alpha), ("beta", beta)):
        _require_exponent(v, name)
    n = _check_degree(n)
    (al, be, aa), _ = _lift([alpha, beta, a])
    with mpmath.workdps(EXTENDED_DPS + 10):
        return make_monic(_jl_sum(al, be, aa, n), kind)


# ---------------------------------------------------------------------------
# subleading coefficients

@dataclass(frozen=True)
class SubleadingCoefficients:
    """Coefficients A (of x^{N-1}) and B (of x^{N-2}) of a monic polynomial.

    ``B`` is None when no closed form is provided for the family/index.
    """

    family: object
    indices: tuple
    A: object
    B: object


def _ja_A_diag(al, be, ga, a, n):
    if n == 0:
        return al * 0
    s = al + be + ga
    return -n * ((al + be + 2 * n) + a * (be + ga + 2 * n)) / (s + 3 * n)


def _ja_B_diag(al, be, ga, a, n):
    if n == 0:
        return al * 0
    s = al + be + ga
    if n == 1:
        # the generic form's n(n-1) term vanishes and a factor s+2 cancels
        return a * (be + 1) / (s + 3)
    D = (s + 3 * n) * (s + 3 * n - 1)
    quad = ((al + be + 2 * n) * (al + be + 2 * n - 1)
            + 2 * a * (al + be + 2 * n) * (be + ga + 2 * n)
            + a * a * (be + ga + 2 * n) * (be + ga + 2 * n - 1))
    return (a * n * (s + 2 * n) * (be + n) / D
            + Fraction(n * (n - 1), 2) * quad / D)


def subleading_coefficients(spec, indices, kind="double"):
    """Closed-form next-to-leading coefficients of the (n,m) polynomial.

    Available for any (n,m) of the three-exponent [0,1] family (A only)
    and for the diagonal (n,n) and off-diagonal (n+1,n) indices of the
    two-interval Jacobi family (A and B).
    """
    validate(spec)
    n, m = _pair(indices)
    if isinstance(spec, JacobiPineiro):
        if spec.r != 2:
            raise UnsupportedMultiplicity("closed forms cover two weights")
        a0 = Fraction(spec.alpha0)
        a1, a2 = (Fraction(v) for v in spec.alphas)
        return SubleadingCoefficients(
            spec, (n, m), scalar(_jp_A(a0, a1, a2, n, m), kind), None)
    if isinstance(spec, JacobiAngelesco):
        if n == m:
            (al, be, ga, aa), _ = _lift([spec.alpha, spec.beta, spec.gamma,
                                         spec.a])
            return SubleadingCoefficients(
                spec, (n, m),
                scalar(_ja_A_diag(al, be, ga, aa, n), kind),
                scalar(_ja_B_diag(al, be, ga, aa, n), kind))
        if n == m + 1:
            if kind == "rational":
                raise ScalarKindMismatch(
                    "off-diagonal coefficients contain the irrational X_n")
            with mpmath.workdps(EXTENDED_DPS + 10):
                al, be, ga = (mpf(spec.alpha), mpf(spec.beta),
                              mpf(spec.gamma))
                aa = mpf(spec.a)
                X = x_moment_ratio(spec, m)
                ratio = mpf(1) if m == 0 else _ja_offdiag_ratio(al, be, ga, m)
                A = _ja_A_diag(al, be + 1, ga, aa, m) - X * ratio
                B = (_ja_B_diag(al, be + 1, ga, aa, m)
                     - X * _ja_A_diag(al, be, ga, aa, m) * ratio)
                return SubleadingCoefficients(
                    spec, (n, m), scalar(+A, kind), scalar(+B, kind))
        raise UnsupportedFamily(
            "closed forms cover (n,n) and (n+1,n) indices only")
    raise UnsupportedFamily(
        "no closed-form subleading coefficients for %s"
        % type(spec).__name__)


# ---------------------------------------------------------------------------
# raising identities

def raising_apply(spec, j, indices, kind="extended"):
    """Residual of the first-order raising identity at a multi-index.

    Computes q(x) P(x) + sigma(x) P'(x) + kappa * P_raised(x) as a pure
    polynomial, where P_raised belongs to the parameter-lowered family
    with the index raised, and returns max |residual coefficient| divided
    by max |coefficient of kappa * P_raised|.  The singular prefactors
    cancel analytically, so only polynomial arithmetic is involved.
    """
    from .quadrature import oracle_polynomial

    validate(spec)
    n, m = _pair(indices)
    if spec.r != 2:
        raise UnsupportedMultiplicity("raising identities cover two weights")
    if j not in (1, 2):
        raise ValueError("weight index j must be 1 or 2")

    def low(name, v):
        if not v > 0:
            raise ParameterOutOfRange(
                "%s must be > 0 to lower it by one, got %r" % (name, v))
        return v - 1

    if isinstance(spec, JacobiPineiro):
        a0, aj = spec.alpha0, spec.alphas[j - 1]
        alphas = list(spec.alphas)
        alphas[j - 1] = low("alphas[%d]" % (j - 1), aj)
        raised_spec = JacobiPineiro(low("alpha0", a0), tuple(alphas))
        q = [aj, -(aj + a0)]
        sigma = [0, 1, -1]
        kappa = n + m + a0 + aj
        raised = (n + 1, m) if j == 1 else (n, m + 1)
    elif isinstance(spec, MultipleLaguerreFirst):
        aj = spec.alphas[j - 1]
        alphas = list(spec.alphas)
        alphas[j - 1] = low("alphas[%d]" % (j - 1), aj)
        raised_spec = MultipleLaguerreFirst(tuple(alphas))
        q = [aj, -1]
        sigma = [0, 1]
        kappa = 1
        raised = (n + 1, m) if j == 1 else (n, m + 1)
    elif isinstance(spec, MultipleLaguerreSecond):
        cj = spec.cs[j - 1]
        raised_spec = MultipleLaguerreSecond(low("alpha0", spec.alpha0),
                                             spec.cs)
        q = [spec.alpha0, -cj]
        sigma = [0, 1]
        kappa = cj
        raised = (n + 1, m) if j == 1 else (n, m + 1)
    elif isinstance(spec, JacobiAngelesco):
        al, be, ga, a = spec.alpha, spec.beta, spec.gamma, spec.a
        raised_spec = JacobiAngelesco(a, low("alpha", al), low("beta", be),
                                      low("gamma", ga))
        q = [-a * be, al + be * (1 + a) + a * ga, -(al + be + ga)]
        sigma = [0, -a, 1 + a, -1]
        kappa = al + be + ga + n + m
        raised = (n + 1, m + 1)
    elif isinstance(spec, JacobiLaguerre):
        al, be, a = spec.alpha, spec.beta, spec.a
        raised_spec = JacobiLaguerre(a, low("alpha", al), low("beta", be))
        q = [-a * be, al + be + a, -1]
        sigma = [0, -a, 1]
        kappa = 1
        raised = (n + 1, m + 1)
    else:
        raise UnsupportedFamily(
            "no raising identity for %s" % type(spec).__name__)

    P = oracle_polynomial(spec, (n, m), kind)
    R = oracle_polynomial(raised_spec, raised, kind)
    q = [scalar(v, kind) for v in q]
    sigma = [scalar(v, kind) for v in sigma]
    kappa = scalar(kappa, kind)
    lhs = padd(pmul(q, list(P.coeffs)), pmul(sigma, pder(list(P.coeffs))))
    rhs = pscale(list(R.coeffs), -kappa)
    diff = psub(lhs, rhs)
    denom = max(abs(float(c)) for c in rhs)
    return max(abs(float(c)) for c in diff) / denom


# ---------------------------------------------------------------------------
# limit transitions

LIMIT_KINDS = ("jactolag", "jactoher", "lagtoher", "jp_to_ml1", "jp_to_ml2",
               "jp_to_mh", "ja_to_jl", "ja_to_lh")

# Fixed secondary parameters for the limit checks.  The golden-ratio
# offset keeps scaled exponent gaps like (c2-c1)*alpha safely away from
# integers at every tested scale.
_GOLDEN = 0.6180339887498949
_LIMIT_BETA = Fraction(1, 2)
_ML1_ALPHAS = (Fraction(1, 4), Fraction(3, 4))
_ML2_ALPHA0 = Fraction(1, 2)
_ML2_RATES = (1.0, 1.0 + _GOLDEN)
_MH_DRIFTS = (-0.5, _GOLDEN)
_JA_ALPHA = Fraction(1, 2)
_JA_BETA = Fraction(1, 4)
_JA_ENDPOINT = Fraction(-1)


def _monic_exact(S):
    lead = S[-1]
    return [c / lead for c in S]


def _deviation(src, tgt):
    # relative to the target's largest coefficient, floored at 1, so the
    # number is comparable across weight families whose coefficients grow
    # with the degree
    n = max(len(src), len(tgt))
    dev = 0.0
    scale = 1.0
    for i in range(n):
        b = tgt[i] if i < len(tgt) else 0
        scale = max(scale, abs(float(b)))
    for i in range(n):
        a = src[i] if i < len(src) else 0
        b = tgt[i] if i < len(tgt) else 0
        dev = max(dev, abs(float(a - b)) / scale)
    return dev


def _ja_pair_source(alpha_f, beta_f, gamma_f, a_f, n, m):
    """Source polynomial at a diagonal (exact) or (n+1,n) (mpf) index."""
    if n == m:
        return _monic_exact(_ja_sum(alpha_f, beta_f, gamma_f, a_f, n)), True
    if n != m + 1:
        raise ValueError("indices must be (n,n) or (n+1,n)")
    spec = JacobiAngelesco(a=float(a_f), alpha=float(alpha_f),
                           beta=float(beta_f), gamma=float(gamma_f))
    X = x_moment_ratio(spec, m)
    up = [scalar(c, "extended")
          for c in _monic_exact(_ja_sum(alpha_f, beta_f + 1, gamma_f, a_f, m))]
    base = [scalar(c, "extended")
            for c in _monic_exact(_ja_sum(alpha_f, beta_f, gamma_f, a_f, m))]
    ratio = scalar(_ja_offdiag_ratio(alpha_f, beta_f, gamma_f, m), "extended")
    return psub([mpf(0)] + up, pscale(base, X * ratio)), False


def limit_check(kind, alpha, indices):
    """Max coefficient deviation of a scaled family from its limit family.

    ``kind`` names the transition; ``alpha`` is the scale parameter sent
    to infinity; ``indices`` is the polynomial degree (classical kinds)
    or the multi-index pair.  The deviation decreases like 1/alpha, or
    like 1/sqrt(alpha) for the four square-root-scaled transitions
    (jactoher, lagtoher, jp_to_mh, ja_to_lh).
    """
    from .quadrature import oracle_polynomial

    if kind not in LIMIT_KINDS:
        raise ValueError("unknown limit kind %r (one of %s)"
                         % (kind, ", ".join(LIMIT_KINDS)))
    alpha = float(alpha)
    if not alpha > 1:
        raise ValueError("scale parameter must exceed 1")
    aF = Fraction(alpha)

    if kind == "jactolag":
        n = _single(indices)
        src = _monic_exact(_classical_jacobi_sum(aF, _LIMIT_BETA, n))
        src = shift_scale(src, 1 / aF, Fraction(0))
        src = pscale(src, aF ** n)
        tgt = _monic_exact(_classical_laguerre_coeffs(_LIMIT_BETA, n))
        return _deviation(src, tgt)

    if kind == "jactoher":
        n = _single(indices)
        extra = int(n * math.log10(alpha)) + 25
        with mpmath.workdps(EXTENDED_DPS + extra):
            src = _monic_exact(_classical_jacobi_sum(mpf(alpha), mpf(alpha), n))
            half_width = 2 * mpmath.sqrt(alpha)
            src = shift_scale(src, 1 / half_width, mpf(1) / 2)
            src = pscale(src, half_width ** n)
            tgt = [scalar(c, "extended")
                   for c in _classical_hermite_coeffs(n)]
            return _deviation(src, tgt)

    if kind == "lagtoher":
        n = _single(indices)
        extra = int(n * math.log10(alpha)) + 25
        with mpmath.workdps(EXTENDED_DPS + extra):
            src = _monic_exact(_classical_laguerre_coeffs(mpf(alpha), n))
            w = mpmath.sqrt(2 * mpf(alpha))
            src = shift_scale(src, w, mpf(alpha))
            src = pscale(src, w ** (-n))
            tgt = [scalar(c, "extended")
                   for c in _classical_hermite_coeffs(n)]
            return _deviation(src, tgt)

    if kind == "jp_to_ml1":
        n, m = _pair(indices)
        a1, a2 = _ML1_ALPHAS
        src = _monic_exact(_jp_sum(aF, a1, a2, n, m))
        src = pscale(shift_scale(src, 1 / aF, Fraction(0)), aF ** (n + m))
        tgt = oracle_polynomial(
            MultipleLaguerreFirst((float(a1), float(a2))), (n, m), "rational")
        return _deviation(src, list(tgt.coeffs))

    if kind == "jp_to_ml2":
        n, m = _pair(indices)
        c1, c2 = (Fraction(c) for c in _ML2_RATES)
        src = _monic_exact(_jp_sum(_ML2_ALPHA0, c1 * aF, c2 * aF, n, m))
        src = pscale(shift_scale(src, -1 / aF, Fraction(1)), (-aF) ** (n + m))
        tgt = oracle_polynomial(
            MultipleLaguerreSecond(float(_ML2_ALPHA0), _ML2_RATES),
            (n, m), "rational")
        return _deviation(src, list(tgt.coeffs))

    if kind == "jp_to_mh":
        n, m = _pair(indices)
        extra = int((n + m) * math.log10(alpha)) + 25
        with mpmath.workdps(EXTENDED_DPS + extra):
            rt = mpmath.sqrt(alpha)
            a1 = mpf(alpha) + _MH_DRIFTS[0] * rt
            a2 = mpf(alpha) + _MH_DRIFTS[1] * rt
            src = _monic_exact(_jp_sum(mpf(alpha), a1, a2, n, m))
            src = shift_scale(src, 1 / (2 * rt), mpf(1) / 2)
            src = pscale(src, (2 * rt) ** (n + m))
            tgt = oracle_polynomial(MultipleHermite(_MH_DRIFTS), (n, m),
                                    "extended")
            return _deviation(src, list(tgt.coeffs))

    if kind == "ja_to_jl":
        n, m = _pair(indices)
        with mpmath.workdps(EXTENDED_DPS + 25):
            src, exact = _ja_pair_source(_JA_ALPHA, _JA_BETA, aF,
                                         _JA_ENDPOINT / aF, n, m)
            if exact:
                src = pscale(shift_scale(src, 1 / aF, Fraction(0)),
                             aF ** (n + m))
                tgt = list(jacobi_laguerre_explicit(
                    float(_JA_ALPHA), float(_JA_BETA), float(_JA_ENDPOINT),
                    n, kind="rational").coeffs)
            else:
                src = pscale(shift_scale(src, 1 / mpf(alpha), mpf(0)),
                             mpf(alpha) ** (n + m))
                tgt = list(oracle_polynomial(
                    JacobiLaguerre(a=float(_JA_ENDPOINT),
                                   alpha=float(_JA_ALPHA),
                                   beta=float(_JA_BETA)),
                    (n, m), "extended").coeffs)
            return _deviation(src, tgt)

    # ja_to_lh
    n, m = _pair(indices)
    extra = int((n + m) * math.log10(alpha)) + 25
    with mpmath.workdps(EXTENDED_DPS + extra):
        src, _ = _ja_pair_source(aF, _JA_BETA, aF, Fraction(-1), n, m)
        rt = mpmath.sqrt(alpha)
        src = [scalar(c, "extended") for c in src]
        src = pscale(shift_scale(src, 1 / rt, mpf(0)), rt ** (n + m))
        tgt = list(polynomial_via_recurrence(
            LaguerreHermite(float(_JA_BETA)), n + m, "extended").coeffs)
        return _deviation(src, tgt)
