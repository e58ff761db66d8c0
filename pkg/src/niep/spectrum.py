"""Spectrum representation and transforms between eigenvalue, moment and
coefficient views.

A candidate spectrum is a conjugate-closed multiset of complex numbers.  The
three interchangeable views used throughout the package are

* the eigenvalues themselves (:class:`Spectrum`),
* the power sums ``s_k = sum(v**k)`` (:class:`Moments`),
* the monic characteristic-polynomial coefficients ``k_1..k_n`` of
  ``x**n + k_1 x**(n-1) + ... + k_n`` (:class:`MonicPolynomialCoeffs`).

Moments and coefficients are linked by the Newton identities

    s_m + k_1 s_{m-1} + ... + k_{m-1} s_1 + m k_m = 0,

which also yield the characteristic polynomial of a matrix from the traces
of its powers, so no eigensolver is needed anywhere in this package.

All arithmetic is binary64.  Tolerances are absolute and are applied after
normalizing by ``max(1, max|v|)``; every inequality handled downstream is
homogeneous or affine in the spectrum scale, so this is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, EmptyInput, InvalidParameter, UnpairedConjugate

DEFAULT_TOL = 1e-9


def scale_of(values: Sequence[complex]) -> float:
    """Normalization scale ``max(1, max|v|)`` for tolerance comparisons."""
    return max(1.0, max(abs(complex(v)) for v in values))


def scale_from_moments(s: Sequence[float], floor: float = 1.0) -> float:
    """Estimate of the dominant modulus from power sums alone.

    Uses ``|s_k|**(1/k)`` restricted to the top half of the available
    indices, where the multiplicity factor ``n**(1/k)`` distorts the
    estimate the least; small-k sums can overshoot the true scale by a
    factor of up to ``n``, which would make normalized high-order sums
    underflow the tolerance.  ``floor`` bounds the estimate from below
    (pass 0 to get the raw estimate).
    """
    K = len(s)
    top = range(K // 2 + 1, K + 1)
    return max(floor, *(abs(float(s[k - 1])) ** (1.0 / k) for k in top))


@dataclass(frozen=True)
class Spectrum:
    """A conjugate-closed candidate spectrum.

    ``values`` are stored in canonical order (real part descending, then
    imaginary part descending) so that reports are reproducible.
    ``perron_index`` points at a real value that dominates every modulus,
    when one exists; it is ``None`` otherwise.
    """

    values: tuple[complex, ...]
    perron_index: int | None = None

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def scale(self) -> float:
        return scale_of(self.values)

    @property
    def max_modulus(self) -> float:
        return max(abs(v) for v in self.values)

    @property
    def perron_value(self) -> float | None:
        if self.perron_index is None:
            return None
        return self.values[self.perron_index].real

    def is_real(self, tol: float = DEFAULT_TOL) -> bool:
        bound = tol * self.scale
        return all(abs(v.imag) <= bound for v in self.values)

    def real_values(self, tol: float = DEFAULT_TOL) -> tuple[float, ...]:
        """Real parts, provided every value is real within tolerance."""
        if not self.is_real(tol):
            raise InvalidParameter("spectrum has non-real values")
        return tuple(v.real for v in self.values)

    def padded(self, zeros: int) -> "Spectrum":
        """Same spectrum with ``zeros`` extra zero eigenvalues appended."""
        if zeros < 0:
            raise InvalidParameter("cannot append a negative number of zeros")
        return validate_spectrum(self.values + (0j,) * zeros)


def _canonical_order(values: Iterable[complex]) -> tuple[complex, ...]:
    return tuple(sorted((complex(v) for v in values), key=lambda v: (-v.real, -v.imag)))


def validate_spectrum(values: Sequence[complex], tol: float = DEFAULT_TOL) -> Spectrum:
    """Validate conjugate closure and return the canonical :class:`Spectrum`.

    Non-real values are greedily paired, each with the distinct unpaired
    value nearest its conjugate (ties broken by input order).  A pairing
    failure raises :class:`UnpairedConjugate`, which doubles as the reality
    check: real matrices have conjugate-closed spectra.

    The Perron index is set to the first (in canonical order) real value
    ``v`` with ``v >= max|values| - tol*scale``; such a value is what the
    Perron-Frobenius theorem demands of a realizable spectrum.
    """
    vals = [complex(v) for v in values]
    if not vals:
        raise EmptyInput("spectrum must contain at least one value")
    if tol <= 0:
        raise InvalidParameter("tol must be positive")
    bound = tol * scale_of(vals)

    unpaired = set(range(len(vals)))
    for i, v in enumerate(vals):
        if i not in unpaired or abs(v.imag) <= bound:
            continue
        target = v.conjugate()
        best, best_dist = None, None
        for j in sorted(unpaired):
            if j == i:
                continue
            d = abs(vals[j] - target)
            if d <= bound and (best is None or d < best_dist):
                best, best_dist = j, d
        if best is None:
            raise UnpairedConjugate(v)
        unpaired.discard(i)
        unpaired.discard(best)

    ordered = _canonical_order(vals)
    maxmod = max(abs(v) for v in ordered)
    perron = None
    for i, v in enumerate(ordered):
        if abs(v.imag) <= bound and v.real >= maxmod - bound:
            perron = i
            break
    return Spectrum(values=ordered, perron_index=perron)


def as_spectrum(values, tol: float = DEFAULT_TOL) -> Spectrum:
    """Coerce a :class:`Spectrum` or a raw value sequence to a Spectrum."""
    if isinstance(values, Spectrum):
        return values
    return validate_spectrum(values, tol)


@dataclass(frozen=True)
class Moments:
    """Power sums ``s[k-1] = sum(v**k)`` for ``k = 1..K``."""

    s: tuple[float, ...]

    @property
    def K(self) -> int:
        return len(self.s)

    def __getitem__(self, k: int) -> float:
        """1-based access: ``m[k]`` is the k-th power sum."""
        if not 1 <= k <= self.K:
            raise IndexError(f"moment index {k} outside 1..{self.K}")
        return self.s[k - 1]


@dataclass(frozen=True)
class MonicPolynomialCoeffs:
    """Coefficients ``k_1..k_n`` of ``x**n + k_1 x**(n-1) + ... + k_n``."""

    k: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.k)

    def __getitem__(self, j: int) -> float:
        """1-based access: ``p[j]`` is the coefficient of ``x**(n-j)``."""
        if not 1 <= j <= self.n:
            raise IndexError(f"coefficient index {j} outside 1..{self.n}")
        return self.k[j - 1]


@dataclass(frozen=True)
class SymmetricFunctions:
    """Elementary symmetric functions ``E_1..E_n`` and the normalized
    Newton coefficients ``c_k = E_k / C(n, k)`` (``c_0 = 1``)."""

    E: tuple[float, ...]
    c: tuple[float, ...] = field(default=())

    def __post_init__(self):
        if not self.c:
            n = len(self.E)
            object.__setattr__(
                self, "c", (1.0, *(self.E[k - 1] / math.comb(n, k) for k in range(1, n + 1)))
            )

    @property
    def n(self) -> int:
        return len(self.E)


def moments(spectrum, K: int, tol: float = DEFAULT_TOL) -> Moments:
    """Power sums ``s_1..s_K`` of a conjugate-closed spectrum.

    The imaginary residue of each sum must stay below ``n * tol`` after
    scale normalization; conjugate closure guarantees this.
    """
    sp = as_spectrum(spectrum, tol)
    if K < 1:
        raise InvalidParameter("K must be at least 1")
    vals = np.asarray(sp.values, dtype=complex)
    out = []
    power = np.ones_like(vals)
    scale = sp.scale
    for k in range(1, K + 1):
        power = power * vals
        total = power.sum()
        if abs(total.imag) > sp.n * tol * scale**k:
            raise UnpairedConjugate(total, "moment has a non-real residue")
        out.append(float(total.real))
    return Moments(s=tuple(out))


def elementary_symmetric(spectrum, tol: float = DEFAULT_TOL) -> SymmetricFunctions:
    """Elementary symmetric functions of the spectrum, with Newton
    coefficients ``c_k = E_k / C(n, k)``."""
    sp = as_spectrum(spectrum, tol)
    n = sp.n
    scale = sp.scale
    # partial-product recurrence; E[j] accumulates the j-th symmetric sum
    acc = np.zeros(n + 1, dtype=complex)
    acc[0] = 1.0
    for i, v in enumerate(sp.values):
        for j in range(min(i + 1, n), 0, -1):
            acc[j] += v * acc[j - 1]
    for j in range(1, n + 1):
        if abs(acc[j].imag) > n * n * tol * scale**j:
            raise UnpairedConjugate(acc[j], f"E_{j} has a non-real residue")
    return SymmetricFunctions(E=tuple(float(acc[j].real) for j in range(1, n + 1)))


def coeffs_from_spectrum(spectrum, tol: float = DEFAULT_TOL) -> MonicPolynomialCoeffs:
    """Characteristic-polynomial coefficients ``k_j = (-1)**j E_j``."""
    sym = elementary_symmetric(spectrum, tol)
    return MonicPolynomialCoeffs(
        k=tuple((-1) ** j * sym.E[j - 1] + 0.0 for j in range(1, sym.n + 1))
    )


def coeffs_from_moments(m: Moments | Sequence[float], n: int) -> MonicPolynomialCoeffs:
    """Solve the Newton identities for ``k_1..k_n`` given ``s_1..s_n``."""
    s = m.s if isinstance(m, Moments) else tuple(float(x) for x in m)
    if len(s) < n:
        raise DimensionMismatch(f"need at least {n} moments, got {len(s)}")
    k: list[float] = []
    for mm in range(1, n + 1):
        acc = s[mm - 1]
        for j in range(1, mm):
            acc += k[j - 1] * s[mm - j - 1]
        k.append(-acc / mm)
    return MonicPolynomialCoeffs(k=tuple(k))


def moments_from_coeffs(p: MonicPolynomialCoeffs | Sequence[float], K: int) -> Moments:
    """Invert the Newton identities; beyond ``k = n`` the linear recurrence
    ``s_m = -sum_j k_j s_{m-j}`` applies."""
    k = p.k if isinstance(p, MonicPolynomialCoeffs) else tuple(float(x) for x in p)
    if K < 1:
        raise InvalidParameter("K must be at least 1")
    n = len(k)
    s: list[float] = []
    for mm in range(1, K + 1):
        if mm <= n:
            acc = mm * k[mm - 1]
            for j in range(1, mm):
                acc += k[j - 1] * s[mm - j - 1]
        else:
            acc = 0.0
            for j in range(1, n + 1):
                acc += k[j - 1] * s[mm - j - 1]
        s.append(-acc)
    return Moments(s=tuple(s))


def as_square(a) -> np.ndarray:
    """Coerce to a float square matrix (row-major nested lists accepted)."""
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidParameter(f"expected a square matrix, got shape {arr.shape}")
    return arr


def moments_of_matrix(a, K: int) -> Moments:
    """Traces of matrix powers, by repeated multiplication."""
    arr = as_square(a)
    if K < 1:
        raise InvalidParameter("K must be at least 1")
    out = []
    power = np.eye(arr.shape[0])
    for _ in range(K):
        power = power @ arr
        out.append(float(np.trace(power)))
    return Moments(s=tuple(out))


def charpoly_of_matrix(a) -> MonicPolynomialCoeffs:
    """Coefficients of ``det(xI - A)`` from the trace recursion.

    Power traces feed the Newton identities, so the computation involves no
    root finding and stays valid for any real square matrix.
    """
    arr = as_square(a)
    n = arr.shape[0]
    return coeffs_from_moments(moments_of_matrix(arr, n), n)
