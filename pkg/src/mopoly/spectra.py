"""Zeros of stepline polynomials via the banded Hessenberg eigenproblem.

The degree-N stepline polynomial is the characteristic polynomial of the
N x N banded Hessenberg matrix built from (b_n, c_n, d_n), so its zeros
are the matrix eigenvalues.  The matrix is nonsymmetric; eigenvalues are
computed densely in double precision, checked for spurious imaginary
parts, optionally polished by one extended-precision Newton step, and
sorted into the support intervals of the weights.

Residuals are |P_N(zero)| evaluated by running the recurrence at the
point, never by expanding coefficients, which would be unstable for
large N.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np
from mpmath import mpf

from .core import (
    EXTENDED_DPS,
    EigenFailure,
    JacobiAngelesco,
    JacobiLaguerre,
    LaguerreHermite,
    ScalarKindMismatch,
    SpuriousComplexPair,
    stepline_index,
    validate,
)
from .recurrence import hessenberg, stepline_coeffs

_MAX_DIMENSION = 500
_IMAG_TOL = 1e-8          # relative to the spectral radius
_BOUNDARY_TOL = 1e-12     # relative to the spectral radius


@dataclass(frozen=True)
class ZeroReport:
    """Zeros of one stepline polynomial with location bookkeeping.

    ``per_interval_counts`` has one entry per support interval (two for
    the two-interval families, one otherwise).  ``residuals`` holds the
    extended-precision Newton corrections |P/P'| at each zero, an estimate
    of its absolute error.  ``boundary_assigned`` counts zeros that sat
    within the boundary tolerance of the shared endpoint 0 and were
    assigned to whichever interval the theoretical counts required.
    """

    zeros: tuple
    per_interval_counts: tuple
    max_imag_discarded: float
    residuals: tuple
    boundary_assigned: int = 0


def _coeff_table(spec, N, kind):
    return [stepline_coeffs(spec, k, kind=kind) for k in range(N)]


def _eval_with_derivative(table, x):
    """(P_N(x), P_N'(x)) by running the recurrence; stable for large N."""
    p2 = p1 = None
    dp2 = dp1 = None
    p = x * 0 + 1
    dp = x * 0
    for b, c, d in table:
        np_ = (x - b) * p
        ndp = p + (x - b) * dp
        if p1 is not None and c != 0:
            np_ -= c * p1
            ndp -= c * dp1
        if p2 is not None and d != 0:
            np_ -= d * p2
            ndp -= d * dp2
        p2, p1, p = p1, p, np_
        dp2, dp1, dp = dp1, dp, ndp
    return p, dp


def _intervals(spec):
    from .quadrature import weights_of

    wds = weights_of(spec)
    if isinstance(spec, (JacobiAngelesco, JacobiLaguerre, LaguerreHermite)):
        return [wd.support for wd in wds]
    return [wds[0].support]


def _expected_counts(spec, N):
    if isinstance(spec, (JacobiAngelesco, JacobiLaguerre, LaguerreHermite)):
        nvec = stepline_index(N, 2).entries
        return (nvec[0], nvec[1])
    return (N,)


def zeros(spec, N, kind="double"):
    """Zeros of the degree-N stepline polynomial as a :class:`ZeroReport`.

    Eigenvalues whose imaginary part exceeds 1e-8 of the spectral radius
    trigger an extended-precision root solve of the monic polynomial (the
    banded matrix is nonsymmetric and double eigenvalues can drift off the
    real axis for Laguerre-type weights near N = 25); if even that leaves a
    complex pair, :class:`SpuriousComplexPair` is raised.  Smaller imaginary
    parts are discarded into ``max_imag_discarded``, never silently.  Each
    zero is polished by one extended-precision Newton step on the
    recurrence-evaluated polynomial before residuals are measured.
    """
    validate(spec)
    if kind == "rational":
        raise ScalarKindMismatch("zeros are irrational; use double or extended")
    N = int(N)
    if N < 0:
        raise ValueError("degree must be nonnegative")
    if N > _MAX_DIMENSION:
        raise ValueError("degree %d exceeds the supported bound %d"
                         % (N, _MAX_DIMENSION))
    if N == 0:
        counts = tuple(0 for _ in _intervals(spec))
        return ZeroReport((), counts, 0.0, ())

    H = hessenberg(spec, N, kind="double").dense()
    eig = np.linalg.eigvals(H)
    srad = float(max(abs(eig)))
    scale = max(srad, 1.0)
    max_imag = float(max(abs(eig.imag)))
    if max_imag > _IMAG_TOL * scale:
        roots, max_imag = _roots_extended(spec, N, scale)
    else:
        roots = sorted(float(v) for v in eig.real)

    steps = 3 if kind == "extended" else 1
    with mpmath.workdps(EXTENDED_DPS + 10):
        table = _coeff_table(spec, N, "extended")
        polished = []
        for x in roots:
            x = mpf(x)
            for _ in range(steps):
                p, dp = _eval_with_derivative(table, x)
                if dp == 0:
                    break
                x = x - p / dp
            polished.append(x)
        polished.sort()
        # |P/P'| estimates each root's absolute error; the raw value |P|
        # scales like x^N and is unreadable for unbounded supports
        residuals = []
        for x in polished:
            p, dp = _eval_with_derivative(table, x)
            residuals.append(abs(p / dp) if dp != 0 else abs(p))

    counts, boundary = _assign_intervals(spec, N, polished, scale)
    if kind == "double":
        out = tuple(float(x) for x in polished)
        res = tuple(float(r) for r in residuals)
    else:
        out = tuple(polished)
        res = tuple(residuals)
    return ZeroReport(out, counts, max_imag, res, boundary)


def _roots_extended(spec, N, scale):
    from .construct import polynomial_via_recurrence

    poly = polynomial_via_recurrence(spec, N, kind="extended")
    with mpmath.workdps(EXTENDED_DPS + 20):
        found = mpmath.polyroots(list(reversed(poly.coeffs)),
                                 maxsteps=200, extraprec=2 * N + 60)
    max_imag = float(max(abs(mpmath.im(r)) for r in found))
    if max_imag > _IMAG_TOL * scale:
        worst = max(found, key=lambda r: abs(mpmath.im(r)))
        raise SpuriousComplexPair(
            "root %s has imaginary part %.3g beyond %.3g * radius"
            % (mpmath.nstr(worst, 17), max_imag, _IMAG_TOL))
    return sorted(float(mpmath.re(r)) for r in found), max_imag


def _assign_intervals(spec, N, roots, scale):
    if not isinstance(spec, (JacobiAngelesco, JacobiLaguerre,
                             LaguerreHermite)):
        return (len(roots),), 0
    want = _expected_counts(spec, N)
    btol = _BOUNDARY_TOL * scale
    left = sum(1 for x in roots if x < -btol)
    right = sum(1 for x in roots if x > btol)
    pool = len(roots) - left - right
    boundary = pool
    # zeros numerically at the shared endpoint go to the deficient side
    take_left = min(pool, max(0, want[0] - left))
    left += take_left
    right += pool - take_left
    return (left, right), boundary


def zero_location_check(spec, N, kind="double"):
    """Zeros with their interval counts certified against the theory.

    Two-interval families must place ceil(N/2) zeros in the left interval
    and floor(N/2) in the right; single-interval families must keep all N
    inside the support.  Raises :class:`EigenFailure` when the computed
    configuration cannot match, including zeros escaping the support.
    """
    report = zeros(spec, N, kind=kind)
    want = _expected_counts(spec, N)
    if report.per_interval_counts != want:
        raise EigenFailure(
            "interval counts %s do not match the theoretical %s"
            % (report.per_interval_counts, want))
    intervals = _intervals(spec)
    lo = min(i[0] for i in intervals)
    hi = max(i[1] for i in intervals)
    pad = 1e-9 * max([1.0] + [abs(float(z)) for z in report.zeros])
    for z in report.zeros:
        z = float(z)
        if z < lo - pad or z > hi + pad:
            raise EigenFailure(
                "zero %r escapes the support [%r, %r]" % (z, lo, hi))
    return report
