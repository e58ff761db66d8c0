"""Constructions of realizing matrices, each certified against its target.

A certificate ties a matrix to a target spectrum through the maximal
coefficient residual of the characteristic polynomials (computed by trace
recursion, scale-normalized) and through the smallest matrix entry.  Every
constructor funnels its output through :func:`verify_realization`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstructionError,
    DimensionMismatch,
    InvalidParameter,
    NotCompanionNonnegative,
    NotSuleimanova,
    OutsidePi3,
)
from .reports import DecisionVerdict
from .spectrum import (
    DEFAULT_TOL,
    Spectrum,
    as_spectrum,
    as_square,
    charpoly_of_matrix,
    coeffs_from_spectrum,
    validate_spectrum,
)
from .sufficient import check_suleimanova

RESIDUAL_BOUND = 1e-8


@dataclass(frozen=True)
class RealizationCertificate:
    """A matrix, its target spectrum and the evidence linking them."""

    matrix: np.ndarray
    target: Spectrum
    coeff_residual: float
    min_entry: float
    symmetry_defect: float | None = None
    row_sum_deviation: float | None = None
    tol: float = DEFAULT_TOL

    @property
    def valid(self) -> bool:
        return self.coeff_residual <= RESIDUAL_BOUND and self.min_entry >= -self.tol

    def to_json(self) -> dict:
        out = {
            "matrix": [[float(x) for x in row] for row in self.matrix],
            "target": [[v.real, v.imag] for v in self.target.values],
            "coeff_residual": self.coeff_residual,
            "min_entry": self.min_entry,
            "valid": self.valid,
        }
        if self.symmetry_defect is not None:
            out["symmetry_defect"] = self.symmetry_defect
        if self.row_sum_deviation is not None:
            out["row_sum_deviation"] = self.row_sum_deviation
        return out


def verify_realization(matrix, spectrum, tol: float = DEFAULT_TOL) -> RealizationCertificate:
    """Certificate for ``matrix`` against ``spectrum``.

    The residual is ``max_j |k_j(A) - k_j(target)| / sigma**j`` with
    ``sigma = max(1, max|v|)``; the certificate is valid when the residual
    stays below 1e-8 and no entry is below ``-tol``.
    """
    a = as_square(matrix)
    sp = as_spectrum(spectrum, tol)
    if a.shape[0] != sp.n:
        raise DimensionMismatch(f"matrix order {a.shape[0]} vs spectrum size {sp.n}")
    got = np.array(charpoly_of_matrix(a).k)
    want = np.array(coeffs_from_spectrum(sp, tol).k)
    sigma = sp.scale
    residual = float(np.max(np.abs(got - want) / sigma ** np.arange(1, sp.n + 1)))
    return RealizationCertificate(
        matrix=a,
        target=sp,
        coeff_residual=residual,
        min_entry=float(a.min()),
        tol=tol,
    )


def realize_companion(spectrum, tol: float = DEFAULT_TOL) -> RealizationCertificate:
    """Companion-matrix realization for spectra with one dominant head and
    nonpositive remainder summing against it.

    All characteristic-polynomial coefficients of such a spectrum are
    nonpositive, so the companion matrix (ones on the subdiagonal,
    ``-k_n .. -k_1`` in the last row) is itself nonnegative.  A positive
    coefficient aborts with :class:`NotCompanionNonnegative`; that signals
    failure of this construction, not non-realizability.
    """
    sp = as_spectrum(spectrum, tol)
    if not sp.is_real(tol):
        raise NotSuleimanova("companion construction requires a real spectrum")
    coeffs = coeffs_from_spectrum(sp, tol).k
    gate = tol * sp.scale ** np.arange(1, sp.n + 1)
    for j, k in enumerate(coeffs, start=1):
        if k > gate[j - 1]:
            raise NotCompanionNonnegative(f"coefficient k_{j} = {k} is positive")
    n = sp.n
    a = np.zeros((n, n))
    for i in range(n - 1):
        a[i, i + 1] = 1.0
    # rounding noise on boundary spectra can leave k_j barely above zero;
    # those entries are clamped rather than carried as tiny negatives
    a[n - 1, :] = np.maximum(-np.asarray(coeffs[::-1]), 0.0)
    return verify_realization(a, sp, tol)


def _cycle3() -> np.ndarray:
    c = np.zeros((3, 3))
    c[0, 1] = c[1, 2] = c[2, 0] = 1.0
    return c


def pi3_barycentric(zprime: complex) -> tuple[float, float, float]:
    """Coordinates ``(a0, a1, a2)`` with ``zprime = a0 + a1 w + a2 conj(w)``
    and ``a0 + a1 + a2 = 1``, where ``w = exp(2 pi i / 3)``."""
    # real part: a0 - (a1 + a2)/2 ; imag part: sqrt(3)/2 (a1 - a2)
    zprime = complex(zprime)
    a0 = (1.0 + 2.0 * zprime.real) / 3.0
    diff = zprime.imag * 2.0 / np.sqrt(3.0)
    rest = 1.0 - a0
    a1 = (rest + diff) / 2.0
    a2 = (rest - diff) / 2.0
    return a0, a1, a2


def realize_circulant_n3(
    lam1: float, z: complex, tol: float = DEFAULT_TOL
) -> RealizationCertificate:
    """Circulant realization of ``{lam1, z, conj(z)}`` for ``z / lam1``
    inside the triangle of cube roots of unity:
    ``lam1 * (a0 I + a1 C + a2 C^2)`` with ``C`` the 3-cycle."""
    if lam1 <= 0:
        raise OutsidePi3(f"lam1 must be positive, got {lam1}")
    alphas = pi3_barycentric(complex(z) / lam1)
    if min(alphas) < -tol:
        raise OutsidePi3(f"barycentric coordinates {alphas} have a negative entry")
    alphas = tuple(max(a, 0.0) for a in alphas)
    c = _cycle3()
    a = lam1 * (alphas[0] * np.eye(3) + alphas[1] * c + alphas[2] * (c @ c))
    target = validate_spectrum([lam1, complex(z), complex(z).conjugate()], tol)
    return verify_realization(a, target, tol)


def hadamard(k: int) -> np.ndarray:
    """Sylvester matrix of order ``2**k``: entries ``+-1``, first row and
    column all ones, rows pairwise orthogonal (exactly, in integers)."""
    if k < 0:
        raise InvalidParameter("k must be nonnegative")
    h = np.array([[1]], dtype=np.int64)
    for _ in range(k):
        h = np.block([[h, h], [h, -h]])
    n = h.shape[0]
    assert np.array_equal(h @ h.T, n * np.eye(n, dtype=np.int64))
    return h


def spectracone_contains(
    s, x, tol: float = DEFAULT_TOL
) -> tuple[bool, np.ndarray]:
    """Whether ``S diag(x) S^{-1}`` is entrywise nonnegative (membership of
    ``x`` in the polyhedral cone of diagonals that ``S`` conjugates into
    nonnegative matrices).  Returns the membership flag and the conjugated
    matrix as witness.

    The inverse is applied through partial-pivot solves; a 1-norm condition
    estimate above 1e12 triggers a warning because membership is
    tolerance-sensitive there.
    """
    s_mat = as_square(s)
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size != s_mat.shape[0]:
        raise DimensionMismatch("x must have one entry per row of S")
    try:
        inv = np.linalg.solve(s_mat, np.eye(s_mat.shape[0]))
    except np.linalg.LinAlgError as exc:
        raise InvalidParameter(f"S is singular: {exc}") from exc
    cond = float(np.abs(s_mat).sum(axis=0).max() * np.abs(inv).sum(axis=0).max())
    if cond > 1e12:
        warnings.warn(
            f"condition estimate {cond:.3g} is large; membership may be unreliable",
            RuntimeWarning,
            stacklevel=2,
        )
    witness = (s_mat * x) @ inv
    member = bool(witness.min() >= -tol * max(1.0, float(np.abs(x).max())))
    return member, witness


def realize_hadamard_suleimanova(
    spectrum, tol: float = DEFAULT_TOL
) -> RealizationCertificate:
    """Symmetric doubly-stochastic-after-scaling realization of a
    one-dominant-head spectrum, padded with zeros to the next power of two.

    With ``H`` the Sylvester matrix of order ``N`` and ``D`` the padded
    spectrum (head first, remainder descending), ``A = H D H^T / N`` is
    symmetric, has row sums ``lam_1`` and is entrywise nonnegative because
    the head absorbs the total negative mass.  The certificate's target is
    the zero-padded spectrum.
    """
    verdict = check_suleimanova(spectrum, tol)
    if verdict.verdict is not DecisionVerdict.REALIZABLE:
        raise NotSuleimanova(f"not a one-dominant-head spectrum: {verdict.reason}")
    sp = as_spectrum(spectrum, tol)
    vals = sorted((v.real for v in sp.values), reverse=True)
    k = 0
    while 2**k < len(vals):
        k += 1
    n_pad = 2**k
    padded = [vals[0]] + sorted(vals[1:] + [0.0] * (n_pad - len(vals)), reverse=True)
    h = hadamard(k).astype(float)
    a = (h * np.asarray(padded)) @ h.T / n_pad
    a = (a + a.T) / 2.0  # products are exact (+-1 factors); force exact symmetry
    target = validate_spectrum(padded, tol)
    cert = verify_realization(a, target, tol)
    row_dev = float(np.abs(a.sum(axis=1) - vals[0]).max())
    sym_defect = float(np.abs(a - a.T).max())
    return RealizationCertificate(
        matrix=cert.matrix,
        target=cert.target,
        coeff_residual=cert.coeff_residual,
        min_entry=cert.min_entry,
        symmetry_defect=sym_defect,
        row_sum_deviation=row_dev,
        tol=tol,
    )


def direct_sum(a, b) -> np.ndarray:
    """Block-diagonal union; the spectrum is the multiset union."""
    a, b = as_square(a), as_square(b)
    n, m = a.shape[0], b.shape[0]
    out = np.zeros((n + m, n + m))
    out[:n, :n] = a
    out[n:, n:] = b
    return out


def realize_auto(spectrum, tol: float = DEFAULT_TOL) -> RealizationCertificate:
    """Pick a construction from the input shape: companion for real
    one-dominant-head spectra, the circulant for order 3 with a conjugate
    pair, the Hadamard route as fallback for real inputs."""
    sp = as_spectrum(spectrum, tol)
    if not sp.is_real(tol):
        if sp.n != 3:
            raise ConstructionError("no construction covers complex spectra beyond order 3")
        eps = tol * sp.scale
        lam = next(v.real for v in sp.values if abs(v.imag) <= eps)
        z = next(v for v in sp.values if v.imag > eps)
        return realize_circulant_n3(lam, z, tol)
    try:
        return realize_companion(sp, tol)
    except ConstructionError:
        return realize_hadamard_suleimanova(sp, tol)
