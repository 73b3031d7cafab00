"""Laurent (trigonometric) polynomials on the unit circle.

A TrigPoly stores the exact coefficient window [lo, hi] with no automatic
trimming; equality is padding-insensitive.  Evaluation on uniform grids is
FFT-based and exact (grid aliasing *is* the correct wrap-around of e^{ij th}),
and the L^p quasinorm for 0 < p < infinity is a midpoint-shifted Riemann sum
over normalized Lebesgue measure on the circle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "TrigPoly",
    "evaluate_on_grid",
    "lp_quasinorm",
    "quadrature_floor",
    "riesz_plus",
    "riesz_minus",
    "coefficient",
]

MIN_SAMPLES = 4096
OVERSAMPLE = 512


@dataclass(frozen=True, eq=False)
class TrigPoly:
    """Finitely supported coefficient sequence: coeffs[i] multiplies z^(lo+i)."""

    lo: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if c.ndim != 1 or c.size < 1:
            raise ValueError("coeffs must be a nonempty 1-D sequence")
        if not np.all(np.isfinite(c.real)) or not np.all(np.isfinite(c.imag)):
            raise ValueError("coefficients must be finite")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "lo", int(self.lo))
        object.__setattr__(self, "coeffs", c)

    @property
    def hi(self):
        return self.lo + len(self.coeffs) - 1

    @property
    def degree(self):
        """Stored top index (no trimming of zero coefficients)."""
        return self.hi

    def coefficient(self, j):
        """The coefficient of z^j (0 outside the stored window)."""
        j = int(j)
        if self.lo <= j <= self.hi:
            return complex(self.coeffs[j - self.lo])
        return 0j

    def coefficients_on(self, lo, hi):
        """Coefficients on the index window lo..hi inclusive, zero-padded."""
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty window {lo}..{hi}")
        out = np.zeros(hi - lo + 1, dtype=complex)
        a = max(lo, self.lo)
        b = min(hi, self.hi)
        if a <= b:
            out[a - lo : b - lo + 1] = self.coeffs[a - self.lo : b - self.lo + 1]
        return out

    @property
    def is_analytic(self):
        """True iff every coefficient with negative index vanishes."""
        if self.lo >= 0:
            return True
        cut = min(self.hi, -1)
        return not np.any(self.coeffs[: cut - self.lo + 1])

    @property
    def is_zero(self):
        return not np.any(self.coeffs)

    def shift(self, m):
        """Multiply by z^m (shift the support window)."""
        return TrigPoly(self.lo + int(m), self.coeffs)

    def restrict(self, lo=None, hi=None):
        """Zero all coefficients outside lo..hi (window kept as stored)."""
        lo = self.lo if lo is None else int(lo)
        hi = self.hi if hi is None else int(hi)
        js = np.arange(self.lo, self.hi + 1)
        c = np.where((js >= lo) & (js <= hi), self.coeffs, 0)
        return TrigPoly(self.lo, c)

    def __eq__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return bool(np.array_equal(self.coefficients_on(lo, hi), other.coefficients_on(lo, hi)))

    def __hash__(self):
        raise TypeError("TrigPoly is not hashable (padding-insensitive equality)")

    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return TrigPoly(lo, self.coefficients_on(lo, hi) + other.coefficients_on(lo, hi))

    def __sub__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TrigPoly(self.lo, -self.coeffs)

    def __mul__(self, scalar):
        if isinstance(scalar, TrigPoly):
            return NotImplemented
        return TrigPoly(self.lo, self.coeffs * complex(scalar))

    __rmul__ = __mul__

    def __repr__(self):
        return f"TrigPoly(lo={self.lo}, hi={self.hi}, nnz={int(np.count_nonzero(self.coeffs))})"


def _grid_eval(f, n_samples, half_shift):
    """Values of f at theta_k = 2*pi*(k + half_shift)/N via one inverse FFT."""
    n = int(n_samples)
    js = np.arange(f.lo, f.hi + 1)
    c = f.coeffs
    if half_shift:
        c = c * np.exp(1j * np.pi * js / n)
    z = np.zeros(n, dtype=complex)
    np.add.at(z, js % n, c)
    return np.fft.ifft(z) * n


def evaluate_on_grid(f, n_samples):
    """Values f(e^{i theta_k}) at theta_k = 2*pi*k/n_samples, k = 0..n_samples-1.

    Exact for every n_samples >= 1: coefficients that alias to the same
    residue mod n_samples sum exactly as the point evaluations do.
    """
    if int(n_samples) < 1:
        raise ValueError("n_samples must be >= 1")
    return _grid_eval(f, n_samples, half_shift=False)


def quadrature_floor(f, oversample=OVERSAMPLE):
    """Smallest admissible quadrature size for f: max(4096, oversample*span)."""
    return max(MIN_SAMPLES, int(oversample) * (f.hi - f.lo + 1))


def lp_quasinorm(f, p, n_samples=None):
    """L^p quasinorm over normalized Lebesgue measure, 0 < p < infinity.

    Midpoint-shifted Riemann sum ((1/N) sum |f(e^{i theta_k})|^p)^(1/p) with
    theta_k = 2*pi*(k+1/2)/N; the half-sample shift keeps nodes off the
    z = 1 zeros of real-coefficient kernels.  Monomials are exact at any
    admissible grid size; other polynomials converge as N grows.  For p < 1
    the integrand has square-root cusps at the zeros of f and the midpoint
    rule converges like N^(-3/2), so oscillatory kernels need heavy
    oversampling: the default floor (512 samples per coefficient) keeps the
    doubling error of every kernel family used by the experiments below
    1e-4 relative, measured worst case ~3e-5 on long Dirichlet kernels at
    p = 1/2.
    """
    p = float(p)
    if not (p > 0) or not np.isfinite(p):
        raise ValueError(f"exponent p must be a finite positive real, got {p}")
    floor = quadrature_floor(f)
    if n_samples is None:
        n_samples = floor
    elif int(n_samples) < floor:
        raise ValueError(f"n_samples={int(n_samples)} is below the quadrature floor; need at least {floor}")
    vals = np.abs(_grid_eval(f, n_samples, half_shift=True))
    return float(np.mean(vals**p) ** (1.0 / p))


def riesz_plus(f):
    """Keep the coefficients with index >= 0 (analytic part)."""
    if f.lo >= 0:
        return f
    if f.hi < 0:
        return TrigPoly(0, [0])
    return TrigPoly(0, f.coeffs[-f.lo :])


def riesz_minus(f):
    """Keep the coefficients with index < 0; riesz_plus(f) + riesz_minus(f) = f."""
    if f.hi < 0:
        return f
    if f.lo >= 0:
        return TrigPoly(-1, [0])
    return TrigPoly(f.lo, f.coeffs[: -f.lo])


def coefficient(f, j):
    """The j-th Fourier coefficient of f (0 outside the stored window)."""
    return f.coefficient(j)
