"""Hankel matrices of analytic polynomials and dyadic-decomposition quasinorms.

The bridge between the function side and the operator side: an analytic
polynomial phi of degree d is carried by the (d+1) x (d+1) Hankel matrix with
entries phi^(j+k) — that finite block holds every nonzero entry of the
corresponding infinite matrix, so its spectrum is exact — while the dyadic
window pieces of phi measure its smoothness-penalized size.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import apply_window, standard_window
from .matrices import schatten_quasinorm
from .trigpoly import TrigPoly, lp_quasinorm, quadrature_floor

__all__ = [
    "BesovReport",
    "hankel_matrix",
    "besov_quasinorm",
    "band_hankel_check",
    "polynomial_hankel_sp_bound",
]

HARD_TOL = 1e-9  # slack for exact (quadrature-free) inequalities


def _lp(f, p, oversample):
    """L^p quasinorm at the default floor or at an explicit oversampling rate."""
    n = None if oversample is None else quadrature_floor(f, oversample)
    return lp_quasinorm(f, p, n)


@dataclass(frozen=True)
class BesovReport:
    """Level-by-level dyadic quasinorm summary.

    levels holds (n, 2^n * ||window_n piece||_p^p) in increasing n; zero_term
    is |phi^(0)|^p (the constant coefficient is invisible to the windows and
    is added back so only the zero polynomial has quasinorm 0); total is
    (sum of terms + zero_term)^(1/p).
    """

    p: float
    levels: tuple
    zero_term: float
    total: float


def _require_analytic(f, op):
    if not f.is_analytic:
        raise ValueError(f"{op} requires an analytic polynomial (no negative-index coefficients); got support {f.lo}..{f.hi}")


def hankel_matrix(f):
    """The (d+1) x (d+1) Hankel matrix with entries phi^(j+k), d = degree(phi)."""
    _require_analytic(f, "hankel_matrix")
    d = f.degree
    c = f.coefficients_on(0, 2 * d)
    idx = np.add.outer(np.arange(d + 1), np.arange(d + 1))
    m = c[idx]
    return m.real if np.all(m.imag == 0) else m


def besov_quasinorm(f, p, v=None, oversample=None):
    """Dyadic (Littlewood-Paley) quasinorm of an analytic polynomial.

    Sums 2^n * ||f * V_n||_p^p over the levels n with 2^{n-1} <= degree(f)
    — every later level is exactly zero because the window is evaluated on
    the coefficients — plus the |phi^(0)|^p augmentation, and reports the
    1/p-th root.
    """
    p = float(p)
    if not (p > 0) or not np.isfinite(p):
        raise ValueError(f"exponent p must be a finite positive real, got {p}")
    _require_analytic(f, "besov_quasinorm")
    if v is None:
        v = standard_window()

    levels = []
    n = 0
    while 2.0 ** (n - 1) <= f.degree:
        piece = apply_window(f, n, v)
        if piece.is_zero:
            term = 0.0
        else:
            term = 2.0**n * _lp(piece, p, oversample) ** p
        levels.append((n, term))
        n += 1

    zero_term = abs(f.coefficient(0)) ** p
    total = (sum(term for _, term in levels) + zero_term) ** (1.0 / p)
    return BesovReport(p=p, levels=tuple(levels), zero_term=zero_term, total=total)


def _infer_band(f):
    """Largest dyadic band (2^{n-1}, 2^{n+1}) that can contain supp(f)."""
    nz = np.nonzero(f.coeffs)[0]
    if nz.size == 0:
        raise ValueError("band polynomial must be nonzero")
    lo_eff = f.lo + int(nz[0])
    if lo_eff < 2:
        raise ValueError(f"band support must start at index >= 2, got {lo_eff}")
    return int(np.floor(np.log2(lo_eff - 1))) + 1


def band_hankel_check(f, p, n=None, tol=HARD_TOL, oversample=None):
    """Two-sided band estimate probe for phi supported in (2^{n-1}, 2^{n+1}).

    Returns (ratio, upper_ok) with ratio = ||Gamma_phi||_{S_p} divided by
    2^{(n+1)/p} ||phi||_{L^p}.  The upper inequality says ratio <= 1;
    upper_ok reports it with slack tol.  The matching lower bound is a
    positive n-independent constant, which is probed as a trend by the
    band-ratio experiment rather than asserted pointwise.

    When n is omitted it is inferred as the largest band whose left edge
    fits under the support (a bare monomial z^m then lands in the band whose
    open left end is m - 1 rounded down to a power of two).
    """
    p = float(p)
    if not (p > 0) or not np.isfinite(p):
        raise ValueError(f"exponent p must be a finite positive real, got {p}")
    _require_analytic(f, "band_hankel_check")
    if n is None:
        n = _infer_band(f)
    n = int(n)
    if n < 1:
        raise ValueError(f"band index must be >= 1, got {n}")
    lo_band, hi_band = 2 ** (n - 1) + 1, 2 ** (n + 1) - 1
    nz = np.nonzero(f.coeffs)[0]
    if nz.size == 0:
        raise ValueError("band polynomial must be nonzero")
    lo_eff, hi_eff = f.lo + int(nz[0]), f.lo + int(nz[-1])
    if lo_eff < lo_band or hi_eff > hi_band:
        raise ValueError(
            f"support {lo_eff}..{hi_eff} violates the level-{n} band {lo_band}..{hi_band}"
        )
    band = TrigPoly(lo_band, f.coefficients_on(lo_band, hi_band))
    ratio = schatten_quasinorm(hankel_matrix(band), p) / (
        2.0 ** ((n + 1) / p) * _lp(band, p, oversample)
    )
    return float(ratio), bool(ratio <= 1.0 + tol)


def polynomial_hankel_sp_bound(f, p, oversample=None):
    """Degree-counting Schatten bound for Hankel matrices of polynomials.

    For p <= 1 and phi of degree at most m - 1, the Schatten quasinorm of
    Gamma_phi is at most 2^{1/p-1} m^{1/p} ||phi||_{L^p}.  Returns
    (lhs, rhs) = (||Gamma_phi||_{S_p}, that bound) so callers can assert
    lhs <= rhs with their preferred slack.
    """
    p = float(p)
    if not (0 < p <= 1):
        raise ValueError(f"p must lie in (0, 1], got {p}")
    _require_analytic(f, "polynomial_hankel_sp_bound")
    m = f.degree + 1
    lhs = schatten_quasinorm(hankel_matrix(f), p)
    rhs = 2.0 ** (1.0 / p - 1.0) * m ** (1.0 / p) * _lp(f, p, oversample)
    return float(lhs), float(rhs)
