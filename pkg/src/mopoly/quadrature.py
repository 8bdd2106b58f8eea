"""Moments, Gauss rules, the moment-system oracle, and simultaneous quadrature.

This module provides the measure-side machinery:

* :func:`weights_of` describes each weight of a family as a
  :class:`WeightDescriptor` (support interval, algebraic endpoint factors,
  exponential factor).
* :func:`moment` evaluates raw moments in closed form - Beta/Gamma integrals
  for the single-interval shapes, hypergeometric forms (2F1, 1F1, Gamma*U)
  for the two-interval families.
* :func:`gauss_rule` builds n-node Gauss rules: classical three-term
  recurrences (Jacobi/Laguerre/Hermite, affinely mapped) where the weight is
  classical, and the moment-based Chebyshev algorithm for the two-interval
  weight pieces, all in extended precision with an exactness certificate.
* :func:`oracle_polynomial` solves the defining orthogonality conditions as
  a dense linear system in normalized moments.  This is the brute-force
  reference construction every closed form is tested against: exact rational
  arithmetic for the four single-interval (AT) families, extended precision
  for the two-interval ones.
* :func:`orthogonality_residuals` certifies a candidate polynomial against
  the defining integrals, via Gauss rules.
* :func:`simultaneous_rule` builds one node set (the zeros of the multiple
  orthogonal polynomial) with one weight vector per weight, and certifies
  the exactness degree of each empirically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
from mpmath import mpf

from .core import (
    EXTENDED_DPS,
    EigenFailure,
    IllConditionedVandermonde,
    JacobiAngelesco,
    JacobiLaguerre,
    JacobiPineiro,
    LaguerreHermite,
    MonicPolynomial,
    MultiIndex,
    MultipleHermite,
    MultipleLaguerreFirst,
    MultipleLaguerreSecond,
    NonIntegrable,
    ScalarKindMismatch,
    SingularMomentMatrix,
    UnsupportedWeightShape,
    make_monic,
    polyval,
    scalar,
    validate,
)

NEG_INF = float("-inf")
POS_INF = float("inf")


# ---------------------------------------------------------------------------
# weight descriptors

@dataclass(frozen=True)
class WeightDescriptor:
    """One weight: prod_i |x - p_i|^{e_i} times an exponential factor.

    ``support`` is an ordered pair (endpoints may be infinite).
    ``algebraic`` lists (point, exponent) pairs; points inside or at the
    boundary of the support with exponent <= -1 would not be integrable.
    ``exponential`` is ("none",), ("exp", c) for e^{-c x}, or ("gauss", c)
    for e^{-x^2 + c x}.
    """

    support: tuple
    algebraic: tuple
    exponential: tuple

    def value(self, x):
        """Weight value at a point of the open support (mpf arithmetic)."""
        x = mpf(x)
        out = mpf(1)
        for point, expo in self.algebraic:
            out *= abs(x - mpf(point)) ** mpf(expo)
        kind = self.exponential[0]
        if kind == "exp":
            out *= mpmath.e ** (-scalar(self.exponential[1], "extended") * x)
        elif kind == "gauss":
            out *= mpmath.e ** (-x * x + scalar(self.exponential[1], "extended") * x)
        return out


def weights_of(spec):
    """The r weight descriptors of a validated family spec."""
    validate(spec)
    if isinstance(spec, JacobiPineiro):
        return [WeightDescriptor((0.0, 1.0), ((0.0, ai), (1.0, spec.alpha0)), ("none",))
                for ai in spec.alphas]
    if isinstance(spec, MultipleLaguerreFirst):
        return [WeightDescriptor((0.0, POS_INF), ((0.0, ai),), ("exp", 1.0))
                for ai in spec.alphas]
    if isinstance(spec, MultipleLaguerreSecond):
        return [WeightDescriptor((0.0, POS_INF), ((0.0, spec.alpha0),), ("exp", cj))
                for cj in spec.cs]
    if isinstance(spec, MultipleHermite):
        return [WeightDescriptor((NEG_INF, POS_INF), (), ("gauss", cj))
                for cj in spec.cs]
    if isinstance(spec, JacobiAngelesco):
        alg = ((spec.a, spec.alpha), (0.0, spec.beta), (1.0, spec.gamma))
        return [WeightDescriptor((spec.a, 0.0), alg, ("none",)),
                WeightDescriptor((0.0, 1.0), alg, ("none",))]
    if isinstance(spec, JacobiLaguerre):
        alg = ((spec.a, spec.alpha), (0.0, spec.beta))
        return [WeightDescriptor((spec.a, 0.0), alg, ("exp", 1.0)),
                WeightDescriptor((0.0, POS_INF), alg, ("exp", 1.0))]
    if isinstance(spec, LaguerreHermite):
        return [WeightDescriptor((NEG_INF, 0.0), ((0.0, spec.beta),), ("gauss", 0.0)),
                WeightDescriptor((0.0, POS_INF), ((0.0, spec.beta),), ("gauss", 0.0))]
    raise UnsupportedWeightShape("no weights for %r" % (spec,))


# ---------------------------------------------------------------------------
# raw moments (closed forms)

def _algebraic_map(wd):
    """Split the algebraic factors into exponents at both endpoints and elsewhere.

    Exponents are normalized to mpf so Fraction-valued parameters flow
    through the closed-form moment and rule builders unchanged.
    """
    lo, hi = wd.support
    at_lo = at_hi = mpf(0)
    elsewhere = []
    for point, expo in wd.algebraic:
        expo = scalar(expo, "extended")
        if point == lo:
            at_lo = expo
        elif point == hi:
            at_hi = expo
        else:
            elsewhere.append((point, expo))
    return at_lo, at_hi, elsewhere


def moment(wd, k, kind="extended"):
    """k-th raw moment int x^k w(x) dx of a weight descriptor, closed form.

    All shapes produced by :func:`weights_of` are covered; results are
    extended-precision floats (or doubles on request).
    """
    if k < 0:
        raise ValueError("moment order must be nonnegative")
    lo, hi = wd.support
    ekind = wd.exponential[0]
    at_lo, at_hi, elsewhere = _algebraic_map(wd)
    with mpmath.workdps(EXTENDED_DPS + 10):
        if ekind == "none" and lo == 0.0 and hi == 1.0 and not elsewhere:
            # Beta integral
            val = mpmath.beta(mpf(at_lo) + k + 1, mpf(at_hi) + 1)
        elif ekind == "none" and lo == 0.0 and hi == 1.0 and len(elsewhere) == 1:
            # (x - a)^alpha x^{beta+k} (1-x)^gamma on [0,1] with a < 0:
            # |a|^alpha B(beta+k+1, gamma+1) 2F1(-alpha, beta+k+1; beta+gamma+k+2; -1/|a|)
            (a, alpha), beta, gamma = elsewhere[0], at_lo, at_hi
            if not a < 0:
                raise UnsupportedWeightShape("interior algebraic point %r" % (a,))
            q = mpf(abs(a))
            val = (q ** mpf(alpha)
                   * mpmath.beta(mpf(beta) + k + 1, mpf(gamma) + 1)
                   * mpmath.hyp2f1(-mpf(alpha), mpf(beta) + k + 1,
                                   mpf(beta) + mpf(gamma) + k + 2, -1 / q))
        elif ekind == "none" and hi == 0.0 and len(elsewhere) == 1 and lo < 0.0:
            # (x-a)^alpha |x|^{beta+k-ish} (1-x)^gamma on [a,0]; substituting
            # x = a s gives |a|^{alpha+beta+1} a^k B(beta+k+1, alpha+1)
            #   2F1(-gamma, beta+k+1; alpha+beta+k+2; -|a|)
            alpha, beta = at_lo, at_hi
            point, gamma = elsewhere[0]
            if point != 1.0:
                raise UnsupportedWeightShape("unexpected algebraic point %r" % (point,))
            q = mpf(-lo)
            val = (q ** (mpf(alpha) + mpf(beta) + 1) * mpf(lo) ** k
                   * mpmath.beta(mpf(beta) + k + 1, mpf(alpha) + 1)
                   * mpmath.hyp2f1(-mpf(gamma), mpf(beta) + k + 1,
                                   mpf(alpha) + mpf(beta) + k + 2, -q))
        elif ekind == "none" and hi == 0.0 and not elsewhere and lo < 0.0:
            # two-endpoint Jacobi piece on [a,0]
            alpha, beta = at_lo, at_hi
            q = mpf(-lo)
            val = (q ** (mpf(alpha) + mpf(beta) + 1) * mpf(lo) ** k
                   * mpmath.beta(mpf(beta) + k + 1, mpf(alpha) + 1))
        elif ekind == "exp" and lo == 0.0 and hi == POS_INF and not elsewhere:
            # Gamma integral with rate c
            c = scalar(wd.exponential[1], "extended")
            val = mpmath.gamma(mpf(at_lo) + k + 1) / c ** (mpf(at_lo) + k + 1)
        elif ekind == "exp" and lo == 0.0 and hi == POS_INF and len(elsewhere) == 1:
            # (x-a)^alpha x^{beta+k} e^{-x} on [0,inf), a < 0:
            # |a|^{alpha+beta+k+1} Gamma(beta+k+1) U(beta+k+1, alpha+beta+k+2, |a|)
            (a, alpha), beta = elsewhere[0], at_lo
            if wd.exponential[1] != 1.0:
                raise UnsupportedWeightShape("rate must be 1 with an algebraic shift")
            q = mpf(abs(a))
            val = (q ** (mpf(alpha) + mpf(beta) + k + 1)
                   * mpmath.gamma(mpf(beta) + k + 1)
                   * mpmath.hyperu(mpf(beta) + k + 1,
                                   mpf(alpha) + mpf(beta) + k + 2, q))
        elif ekind == "exp" and hi == 0.0 and lo < 0.0 and not elsewhere:
            # (x-a)^alpha |x|^{beta+k} e^{-x} on [a,0]: substituting x = a s,
            # |a|^{alpha+beta+k+1} (-1)^k B(beta+k+1, alpha+1)
            #   1F1(beta+k+1; alpha+beta+k+2; |a|)
            alpha, beta = at_lo, at_hi
            if wd.exponential[1] != 1.0:
                raise UnsupportedWeightShape("rate must be 1 on a negative interval")
            q = mpf(-lo)
            val = (q ** (mpf(alpha) + mpf(beta) + k + 1) * (-1) ** k
                   * mpmath.beta(mpf(beta) + k + 1, mpf(alpha) + 1)
                   * mpmath.hyp1f1(mpf(beta) + k + 1,
                                   mpf(alpha) + mpf(beta) + k + 2, q))
        elif ekind == "gauss" and lo == NEG_INF and hi == POS_INF and not wd.algebraic:
            # complete the square: e^{c^2/4} * sqrt(pi) * E[(c/2 + Z)^k], Var Z = 1/2
            c = scalar(wd.exponential[1], "extended")
            mu = c / 2
            acc = mpf(0)
            for i in range(0, k + 1, 2):
                acc += (mpmath.binomial(k, i) * mu ** (k - i)
                        * mpf(_double_factorial(i - 1)) / mpf(2) ** (i // 2))
            val = mpmath.e ** (c * c / 4) * mpmath.sqrt(mpmath.pi) * acc
        elif ekind == "gauss" and wd.exponential[1] == 0.0 and len(wd.algebraic) <= 1:
            # half-range |x|^{beta+k} e^{-x^2}: Gamma((beta+k+1)/2)/2, signed
            beta = (scalar(wd.algebraic[0][1], "extended")
                    if wd.algebraic else mpf(0))
            if lo == 0.0 and hi == POS_INF:
                sign = 1
            elif lo == NEG_INF and hi == 0.0:
                sign = (-1) ** k
            else:
                raise UnsupportedWeightShape("gaussian support %r" % (wd.support,))
            if not mpf(beta) + k + 1 > 0:
                raise NonIntegrable("moment of order %d does not converge" % k)
            val = sign * mpmath.gamma((mpf(beta) + k + 1) / 2) / 2
        else:
            raise UnsupportedWeightShape("no closed-form moment for %r" % (wd,))
        val = +val
    return float(val) if kind == "double" else val


def _double_factorial(n):
    # (-1)!! = 1 by convention
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _pochhammer(x, k):
    out = x * 0 + 1
    for i in range(k):
        out *= x + i
    return out


def normalized_moments(spec, j, count, kind="extended"):
    """First `count` normalized moments m_k/m_0 of weight j (0-based).

    Exact rationals for the four single-interval families (their moment
    ratios are rational functions of the parameters), extended floats for
    the two-interval families.
    """
    validate(spec)
    if kind == "rational":
        if isinstance(spec, JacobiPineiro):
            ai = Fraction(spec.alphas[j])
            a0 = Fraction(spec.alpha0)
            return [_pochhammer(ai + 1, k) / _pochhammer(ai + a0 + 2, k)
                    for k in range(count)]
        if isinstance(spec, MultipleLaguerreFirst):
            ai = Fraction(spec.alphas[j])
            return [_pochhammer(ai + 1, k) for k in range(count)]
        if isinstance(spec, MultipleLaguerreSecond):
            a0 = Fraction(spec.alpha0)
            cj = Fraction(spec.cs[j])
            return [_pochhammer(a0 + 1, k) / cj ** k for k in range(count)]
        if isinstance(spec, MultipleHermite):
            mu = Fraction(spec.cs[j]) / 2
            out = []
            for k in range(count):
                acc = Fraction(0)
                for i in range(0, k + 1, 2):
                    acc += (Fraction(math.comb(k, i)) * mu ** (k - i)
                            * Fraction(_double_factorial(i - 1), 2 ** (i // 2)))
                out.append(acc)
            return out
        raise ScalarKindMismatch(
            "moments of two-interval families are irrational; use extended")
    wd = weights_of(spec)[j]
    with mpmath.workdps(EXTENDED_DPS + 10):
        m0 = moment(wd, 0)
        vals = [moment(wd, k) / m0 for k in range(count)]
        vals = [+v for v in vals]
    if kind == "double":
        return [float(v) for v in vals]
    return vals


# ---------------------------------------------------------------------------
# Gauss rules in extended precision

def _jacobi_recurrence(m, A, B):
    """Monic three-term recurrence for (1-x)^A (1+x)^B on [-1,1]."""
    A = scalar(A, "extended")
    B = scalar(B, "extended")
    alphas = []
    betas = [2 ** (A + B + 1) * mpmath.beta(A + 1, B + 1)]
    for k in range(m):
        if k == 0:
            alphas.append((B - A) / (A + B + 2))
        else:
            s = 2 * k + A + B
            alphas.append((B * B - A * A) / (s * (s + 2)))
    for k in range(1, m):
        if k == 1:
            betas.append(4 * (A + 1) * (B + 1) / ((A + B + 2) ** 2 * (A + B + 3)))
        else:
            s = 2 * k + A + B
            betas.append(4 * k * (k + A) * (k + B) * (k + A + B)
                         / (s * s * (s + 1) * (s - 1)))
    return alphas, betas


def _laguerre_recurrence(m, A):
    A = scalar(A, "extended")
    alphas = [2 * k + A + 1 for k in range(m)]
    betas = [mpmath.gamma(A + 1)] + [k * (k + A) for k in range(1, m)]
    return alphas, betas


def _hermite_recurrence(m):
    alphas = [mpf(0)] * m
    betas = [mpmath.sqrt(mpmath.pi)] + [mpf(k) / 2 for k in range(1, m)]
    return alphas, betas


def _rule_from_recurrence(alphas, betas, m):
    """Nodes and weights of the m-point Gauss rule of a monic recurrence.

    Double-precision symmetric-tridiagonal eigenvalues seed extended
    Newton iterations on p_m; weights come from the Christoffel numbers
    1 / sum_k ptilde_k(x)^2 of the orthonormal polynomials.
    """
    if m < 1:
        raise ValueError("rule needs at least one node")
    diag = np.array([float(a) for a in alphas[:m]])
    off = np.array([math.sqrt(float(b)) for b in betas[1:m]])
    if m == 1:
        seeds = diag.copy()
    else:
        T = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
        seeds = np.linalg.eigvalsh(T)
    sqrt_betas = [mpmath.sqrt(b) for b in betas[:m]]
    nodes = []
    tol = mpf(10) ** (-(mpmath.mp.dps - 3))
    for s in np.sort(seeds):
        x = mpf(float(s))
        for _ in range(60):
            p, dp = _eval_monic(alphas, betas, m, x)
            if dp == 0:
                break
            step = p / dp
            x -= step
            if abs(step) <= tol * (1 + abs(x)):
                break
        else:
            raise EigenFailure("Newton refinement did not converge")
        nodes.append(x)
    nodes.sort()
    weights = []
    for x in nodes:
        pm1 = mpf(0)
        p = 1 / sqrt_betas[0]
        acc = p * p
        for k in range(1, m):
            pnew = ((x - alphas[k - 1]) * p - sqrt_betas[k - 1] * pm1) / sqrt_betas[k]
            pm1, p = p, pnew
            acc += p * p
        weights.append(1 / acc)
    return nodes, weights


def _eval_monic(alphas, betas, m, x):
    """Value and derivative of the degree-m monic polynomial of a recurrence."""
    pm1, p = mpf(0), mpf(1)
    dpm1, dp = mpf(0), mpf(0)
    for k in range(m):
        pnew = (x - alphas[k]) * p - (betas[k] * pm1 if k else 0)
        dpnew = p + (x - alphas[k]) * dp - (betas[k] * dpm1 if k else 0)
        pm1, p = p, pnew
        dpm1, dp = dp, dpnew
    return p, dp


def _chebyshev_recurrence(moms, m):
    """Monic recurrence coefficients from raw moments (Chebyshev algorithm).

    Needs moms[0:2m].  Run at elevated precision: the algorithm loses
    digits roughly in proportion to m, which the caller's workdps absorbs.
    """
    if len(moms) < 2 * m:
        raise ValueError("need %d moments for %d nodes" % (2 * m, m))
    moms = [mpf(v) for v in moms]
    alphas = [moms[1] / moms[0]]
    betas = [moms[0]]
    sig_prev = {k: mpf(0) for k in range(2 * m)}
    sig = dict(enumerate(moms))
    for j in range(1, m):
        nxt = {}
        for k in range(j, 2 * m - j):
            nxt[k] = (sig[k + 1] - alphas[j - 1] * sig[k]
                      - (betas[j - 1] * sig_prev[k] if j > 1 else 0))
        # beta_j = sigma_{j,j} / sigma_{j-1,j-1}; positive iff the measure is
        beta = nxt[j] / sig[j - 1]
        if beta <= 0:
            raise EigenFailure("moment recurrence broke down at step %d" % j)
        alphas.append(nxt[j + 1] / nxt[j] - sig[j] / sig[j - 1])
        betas.append(beta)
        sig_prev, sig = sig, nxt
    return alphas, betas


@dataclass(frozen=True)
class QuadratureRule:
    """Shared nodes with one weight vector per target weight.

    ``exactness[j]`` is the certified maximum monomial degree the rule
    reproduces for target j (checked against closed-form moments).
    """

    nodes: tuple
    weights: tuple
    exactness: tuple
    targets: tuple

    def integrate(self, f, j=0):
        return sum(w * f(x) for x, w in zip(self.nodes, self.weights[j]))


_CLASSICAL_CERT_TOL = 1e-12


def gauss_rule(wd, n, kind="extended"):
    """n-node Gauss rule for a weight descriptor, exact to degree 2n-1.

    Classical shapes (Beta/Gamma/Gaussian weights up to affine maps) use
    closed-form recurrence coefficients; the two-interval pieces build
    their recurrence from closed-form moments via the Chebyshev algorithm.
    Every rule is certified against :func:`moment` before being returned.
    """
    lo, hi = wd.support
    ekind = wd.exponential[0]
    at_lo, at_hi, elsewhere = _algebraic_map(wd)
    with mpmath.workdps(EXTENDED_DPS + 10):
        if ekind == "none" and not elsewhere and math.isfinite(lo) and math.isfinite(hi):
            nodes, weights = _jacobi_rule(lo, hi, at_lo, at_hi, n)
        elif (ekind == "exp" and lo == 0.0 and hi == POS_INF and not elsewhere):
            c = scalar(wd.exponential[1], "extended")
            nodes, weights = _rule_from_recurrence(*_laguerre_recurrence(n, at_lo), n)
            scale = c ** (-mpf(at_lo) - 1)
            nodes = [x / c for x in nodes]
            weights = [w * scale for w in weights]
        elif ekind == "gauss" and lo == NEG_INF and hi == POS_INF and not wd.algebraic:
            c = scalar(wd.exponential[1], "extended")
            nodes, weights = _rule_from_recurrence(*_hermite_recurrence(n), n)
            scale = mpmath.e ** (c * c / 4)
            nodes = [x + c / 2 for x in nodes]
            weights = [w * scale for w in weights]
        else:
            # two-interval weight pieces: build from closed-form moments
            extra = 14 + 3 * n  # Chebyshev algorithm sheds digits as n grows
            with mpmath.workdps(mpmath.mp.dps + extra):
                moms = [moment(wd, k) for k in range(2 * n)]
                alphas, betas = _chebyshev_recurrence(moms, n)
            nodes, weights = _rule_from_recurrence(alphas, betas, n)
        nodes = [+x for x in nodes]
        weights = [+w for w in weights]
        _certify_plain(wd, nodes, weights, n)
    if kind == "double":
        nodes = [float(x) for x in nodes]
        weights = [float(w) for w in weights]
    return QuadratureRule(tuple(nodes), (tuple(weights),), (2 * n - 1,), (wd,))


def _jacobi_rule(lo, hi, at_lo, at_hi, n):
    """Gauss-Jacobi rule on a finite interval with endpoint exponents."""
    h = mpf(hi) - mpf(lo)
    nodes, weights = _rule_from_recurrence(*_jacobi_recurrence(n, at_hi, at_lo), n)
    scale = (h / 2) ** (mpf(at_lo) + mpf(at_hi) + 1)
    nodes = [mpf(lo) + h * (1 + t) / 2 for t in nodes]
    weights = [w * scale for w in weights]
    return nodes, weights


def _certify_plain(wd, nodes, weights, n):
    """Check sum w x^k == moment(k) for k <= 2n-1."""
    worst = 0.0
    for k in range(2 * n):
        ref = moment(wd, k)
        got = mpmath.fsum(w * x ** k for x, w in zip(nodes, weights))
        scale = max(abs(ref), mpmath.fsum(abs(w) * abs(x) ** k
                                          for x, w in zip(nodes, weights)))
        err = float(abs(got - ref) / scale) if scale > 0 else 0.0
        worst = max(worst, err)
    if worst > _CLASSICAL_CERT_TOL:
        raise EigenFailure(
            "gauss rule failed its moment certificate: %.3g > %.3g"
            % (worst, _CLASSICAL_CERT_TOL))


# ---------------------------------------------------------------------------
# the moment-system oracle

_RATIONAL_FAMILIES = (JacobiPineiro, MultipleLaguerreFirst,
                      MultipleLaguerreSecond, MultipleHermite)
_COND_LIMIT = mpf("1e30")


def oracle_polynomial(spec, nvec, kind="extended"):
    """Monic type II multiple orthogonal polynomial by brute force.

    Solves the |n| x |n| linear system given by the orthogonality
    conditions in normalized moments m_k/m_0.  Works for any multi-index
    and any number of weights.  Exact rational elimination for the
    single-interval families; extended-precision QR with column pivoting
    (condition estimate capped at 1e30) for the two-interval families.
    """
    validate(spec)
    if isinstance(nvec, MultiIndex):
        nvec = nvec.entries
    nvec = tuple(int(v) for v in nvec)
    if len(nvec) != spec.r:
        raise ValueError("multi-index length %d != number of weights %d"
                         % (len(nvec), spec.r))
    if any(v < 0 for v in nvec):
        raise ValueError("multi-index entries must be nonnegative")
    N = sum(nvec)
    if N == 0:
        return make_monic([1], kind)
    exact = isinstance(spec, _RATIONAL_FAMILIES) and kind != "extended_only"
    inner = "rational" if exact else "extended"
    if kind == "rational" and not exact:
        raise ScalarKindMismatch(
            "two-interval families have irrational moments; use extended")

    rows = []
    rhs = []
    for j, nj in enumerate(nvec):
        if nj == 0:
            continue
        mu = normalized_moments(spec, j, N + nj, kind=inner)
        for k in range(nj):
            rows.append([mu[i + k] for i in range(N)])
            rhs.append(-mu[N + k])
    if exact:
        sol = _solve_fraction(rows, rhs)
    else:
        with mpmath.workdps(EXTENDED_DPS + 10):
            sol = _solve_qr_pivot(rows, rhs)
            sol = [+v for v in sol]
    return make_monic(list(sol) + [1 if exact else mpf(1)], kind)


def _solve_fraction(rows, rhs):
    """Exact Gaussian elimination with partial pivoting over Fraction."""
    n = len(rows)
    A = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = max(range(col, n), key=lambda i: abs(A[i][col]))
        if A[piv][col] == 0:
            raise SingularMomentMatrix("moment matrix is exactly singular")
        A[col], A[piv] = A[piv], A[col]
        inv = Fraction(1, 1) / A[col][col]
        for i in range(col + 1, n):
            f = A[i][col] * inv
            if f == 0:
                continue
            for jj in range(col, n + 1):
                A[i][jj] -= f * A[col][jj]
    sol = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = A[i][n]
        for jj in range(i + 1, n):
            acc -= A[i][jj] * sol[jj]
        sol[i] = acc / A[i][i]
    return sol


def _solve_qr_pivot(rows, rhs):
    """Householder QR with column pivoting, extended precision."""
    n = len(rows)
    A = [[mpf(v) for v in r] for r in rows]
    b = [mpf(v) for v in rhs]
    perm = list(range(n))
    for col in range(n):
        # pivot on the largest remaining column norm
        norms = []
        for jj in range(col, n):
            norms.append(mpmath.fsum(A[i][jj] ** 2 for i in range(col, n)))
        piv = col + max(range(n - col), key=lambda t: norms[t])
        if piv != col:
            for i in range(n):
                A[i][col], A[i][piv] = A[i][piv], A[i][col]
            perm[col], perm[piv] = perm[piv], perm[col]
        # Householder vector for column col
        x = [A[i][col] for i in range(col, n)]
        normx = mpmath.sqrt(mpmath.fsum(v * v for v in x))
        if normx == 0:
            raise SingularMomentMatrix("moment matrix is numerically singular")
        alpha = -normx if x[0] >= 0 else normx
        v = list(x)
        v[0] -= alpha
        vnorm2 = mpmath.fsum(u * u for u in v)
        if vnorm2 > 0:
            for jj in range(col, n):
                dot = mpmath.fsum(v[i - col] * A[i][jj] for i in range(col, n))
                f = 2 * dot / vnorm2
                for i in range(col, n):
                    A[i][jj] -= f * v[i - col]
            dot = mpmath.fsum(v[i - col] * b[i] for i in range(col, n))
            f = 2 * dot / vnorm2
            for i in range(col, n):
                b[i] -= f * v[i - col]
    diag = [abs(A[i][i]) for i in range(n)]
    if min(diag) == 0 or max(diag) / min(diag) > _COND_LIMIT:
        raise SingularMomentMatrix(
            "moment matrix condition estimate exceeds 1e30")
    y = [mpf(0)] * n
    for i in range(n - 1, -1, -1):
        acc = b[i]
        for jj in range(i + 1, n):
            acc -= A[i][jj] * y[jj]
        y[i] = acc / A[i][i]
    sol = [mpf(0)] * n
    for pos, p in enumerate(perm):
        sol[p] = y[pos]
    return sol


# ---------------------------------------------------------------------------
# orthogonality certificates

def orthogonality_residuals(spec, nvec, poly, kind="extended"):
    """Largest normalized orthogonality residual of a candidate polynomial.

    For weight j and each k < n_j the integral int p(x) w_j(x) x^k dx is
    evaluated by a Gauss rule of sufficient order and normalized by the
    same sum with all factors replaced by absolute values, so a perfectly
    orthogonal polynomial scores ~0 and a generic one scores ~1.
    """
    validate(spec)
    if isinstance(nvec, MultiIndex):
        nvec = nvec.entries
    nvec = tuple(int(v) for v in nvec)
    coeffs = list(poly.coeffs if isinstance(poly, MonicPolynomial) else poly)
    deg = len(coeffs) - 1
    if deg != sum(nvec):
        raise ValueError("degree %d != |n| = %d" % (deg, sum(nvec)))
    wds = weights_of(spec)
    worst = 0.0
    for j, nj in enumerate(nvec):
        if nj == 0:
            continue
        m = (deg + nj) // 2 + 3
        rule = gauss_rule(wds[j], m, kind="extended")
        nodes = rule.nodes
        weights = rule.weights[0]
        if kind == "double":
            nodes = [float(x) for x in nodes]
            weights = [float(w) for w in weights]
            pc = [float(c) for c in coeffs]
        else:
            pc = [scalar(c, "extended") for c in coeffs]
        pvals = [polyval(pc, x) for x in nodes]
        for k in range(nj):
            num = 0
            den = 0
            for x, w, pv in zip(nodes, weights, pvals):
                t = w * x ** k
                num += t * pv
                den += abs(t) * abs(pv)
            res = abs(num) / den if den > 0 else 0.0
            worst = max(worst, float(res))
    return worst


# ---------------------------------------------------------------------------
# simultaneous Gauss quadrature

_SIMUL_CERT_TOL = 1e-10


def simultaneous_rule(spec, nvec, kind="extended"):
    """One node set (zeros of P_nvec) with one weight vector per weight.

    Weights are the integrals of the Lagrange basis polynomials against
    each weight function (computed by Gauss rules, in extended precision).
    The certified exactness degree per weight is measured empirically
    against closed-form moments at relative tolerance 1e-10.
    """
    validate(spec)
    if isinstance(nvec, MultiIndex):
        nvec = nvec.entries
    nvec = tuple(int(v) for v in nvec)
    N = sum(nvec)
    if N == 0:
        raise ValueError("empty rule")
    nodes = _polynomial_zeros(spec, nvec)
    wds = weights_of(spec)
    with mpmath.workdps(EXTENDED_DPS + 10):
        all_weights = []
        exactness = []
        for j, wd in enumerate(wds):
            m = N // 2 + 4
            rule = gauss_rule(wd, m)
            lam = []
            for i in range(N):
                denom = mpf(1)
                for q in range(N):
                    if q != i:
                        denom *= nodes[i] - nodes[q]
                if denom == 0:
                    raise IllConditionedVandermonde("coincident nodes")
                acc = mpf(0)
                for y, w in zip(rule.nodes, rule.weights[0]):
                    ell = mpf(1)
                    for q in range(N):
                        if q != i:
                            ell *= y - nodes[q]
                    acc += w * ell
                lam.append(acc / denom)
            all_weights.append([+v for v in lam])
            exactness.append(_certify_simultaneous(wd, nodes, lam, N, nvec[j]))
    if kind == "double":
        nodes = [float(x) for x in nodes]
        all_weights = [[float(w) for w in lam] for lam in all_weights]
    return QuadratureRule(tuple(nodes), tuple(tuple(lam) for lam in all_weights),
                          tuple(exactness), tuple(wds))


def _certify_simultaneous(wd, nodes, lam, N, nj):
    """Largest prefix degree for which the rule reproduces the moments."""
    top = N + nj + 6
    certified = -1
    for k in range(top + 1):
        ref = moment(wd, k)
        got = mpmath.fsum(w * x ** k for x, w in zip(nodes, lam))
        scale = max(abs(ref), mpmath.fsum(abs(w) * abs(x) ** k
                                          for x, w in zip(nodes, lam)))
        err = float(abs(got - ref) / scale) if scale > 0 else 0.0
        if err > _SIMUL_CERT_TOL:
            break
        certified = k
    return certified


def _polynomial_zeros(spec, nvec):
    """Zeros of P_nvec in extended precision (Newton-polished)."""
    N = sum(nvec)
    stepline = len(nvec) == 2 and nvec[0] - nvec[1] in (0, 1)
    if stepline:
        from .construct import polynomial_via_recurrence
        poly = polynomial_via_recurrence(spec, N, kind="extended")
    else:
        poly = oracle_polynomial(spec, nvec, kind="extended")
    coeffs = [mpf(scalar(c, "extended")) for c in poly.coeffs]
    seeds = np.roots([float(c) for c in reversed(coeffs)])
    if np.max(np.abs(seeds.imag)) > 1e-6 * (1 + np.max(np.abs(seeds))):
        raise EigenFailure("complex starting roots for a real-zero polynomial")
    dcoeffs = [i * coeffs[i] for i in range(1, len(coeffs))]
    nodes = []
    tol = mpf(10) ** (-(mpmath.mp.dps - 3))
    for s in np.sort(seeds.real):
        x = mpf(float(s))
        for _ in range(80):
            p = polyval(coeffs, x)
            dp = polyval(dcoeffs, x)
            if dp == 0:
                break
            step = p / dp
            x -= step
            if abs(step) <= tol * (1 + abs(x)):
                break
        nodes.append(x)
    nodes.sort()
    for i in range(1, len(nodes)):
        if nodes[i] == nodes[i - 1]:
            raise IllConditionedVandermonde("zeros did not separate")
    return nodes
