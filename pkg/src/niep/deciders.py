"""Complete yes/no realizability characterizations for low dimensions and
special families.

Every decider requires its exact dimension (no silent padding or
truncation) and sorts its input internally, so input order never affects a
decision.  Hypotheses beyond dimension (realness, zero trace, the
``2 s_1 >= lambda_1`` gate) yield Inapplicable rather than a fallback to a
weaker test: a gated theorem must not overclaim.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, InvalidParameter, WrongDimension
from .regions import in_pi_k
from .reports import Decision, DecisionVerdict, Witness
from .spectrum import (
    DEFAULT_TOL,
    MonicPolynomialCoeffs,
    Spectrum,
    as_spectrum,
    moments,
    scale_of,
)


@dataclass(frozen=True)
class DiagonalSpec:
    """Prescribed diagonal entries for the fixed-diagonal deciders."""

    d: tuple[float, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.d):
            raise InvalidParameter("diagonal entries must be nonnegative")


def _as_diag(d) -> tuple[float, ...]:
    if isinstance(d, DiagonalSpec):
        return d.d
    return tuple(float(x) for x in d)


def _realizable(reason: str, witness: Witness | None = None, **flags) -> Decision:
    return Decision(DecisionVerdict.REALIZABLE, reason, witness, flags)


def _not_realizable(reason: str, witness: Witness | None = None) -> Decision:
    return Decision(DecisionVerdict.NOT_REALIZABLE, reason, witness)


def _inapplicable(reason: str, witness: Witness | None = None) -> Decision:
    return Decision(DecisionVerdict.INAPPLICABLE, reason, witness)


def _require_n(sp: Spectrum, n: int) -> None:
    if sp.n != n:
        raise WrongDimension(f"decider needs exactly {n} values, got {sp.n}")


def _sorted_reals(sp: Spectrum, tol: float) -> tuple[float, ...] | None:
    """Values sorted descending, or None when the spectrum is not real."""
    if not sp.is_real(tol):
        return None
    return tuple(sorted((v.real for v in sp.values), reverse=True))


def decide_niep_n3(spectrum, tol: float = DEFAULT_TOL) -> Decision:
    """Full order-3 decision.

    All-real lists are realizable exactly when the trace is nonnegative and
    a dominant real value exists.  A list with one real value ``lam`` and a
    conjugate pair ``z, conj(z)`` is realizable exactly when ``lam > 0``
    and ``z / lam`` lies in the triangle of cube roots of unity.
    """
    sp = as_spectrum(spectrum, tol)
    _require_n(sp, 3)
    eps = tol * sp.scale
    reals = _sorted_reals(sp, tol)
    if reals is not None:
        s1 = sum(reals)
        if s1 < -eps:
            return _not_realizable("trace", Witness((1,), 0.0, s1))
        if sp.perron_index is None:
            return _not_realizable("perron", Witness((), sp.max_modulus, reals[0]))
        return _realizable("trace+perron")
    lam = next(v.real for v in sp.values if abs(v.imag) <= eps)
    z = next(v for v in sp.values if v.imag > eps)
    if lam <= eps:
        return _not_realizable("perron", Witness((), abs(z), lam))
    if not in_pi_k(z / lam, 3, tol):
        return _not_realizable("pair_outside_scaled_triangle", Witness((), abs(z), lam))
    return _realizable("pair_in_scaled_triangle")


def decide_rniep_n_le4(spectrum, tol: float = DEFAULT_TOL) -> Decision:
    """Real spectra up to order 4: nonnegative trace plus a dominant real
    value decide realizability."""
    sp = as_spectrum(spectrum, tol)
    if sp.n > 4:
        raise WrongDimension(f"decider covers n <= 4, got {sp.n}")
    reals = _sorted_reals(sp, tol)
    if reals is None:
        return _inapplicable("requires a real spectrum")
    eps = tol * sp.scale
    s1 = sum(reals)
    if s1 < -eps:
        return _not_realizable("trace", Witness((1,), 0.0, s1))
    if sp.perron_index is None:
        return _not_realizable("perron", Witness((), sp.max_modulus, reals[0]))
    return _realizable("trace+perron")


def _normalized_moments(sp: Spectrum, K: int, tol: float) -> tuple[tuple[float, ...], float]:
    sigma = sp.scale
    norm = Spectrum(tuple(v / sigma for v in sp.values), sp.perron_index)
    return moments(norm, K, tol).s, sigma


def decide_trace0_n4(spectrum, tol: float = DEFAULT_TOL) -> Decision:
    """Zero-trace order 4: realizable exactly when ``s_2, s_3 >= 0`` and
    ``s_2^2 <= 4 s_4``."""
    sp = as_spectrum(spectrum, tol)
    _require_n(sp, 4)
    s, sigma = _normalized_moments(sp, 4, tol)
    if abs(s[0]) > tol:
        return _inapplicable("trace is not zero", Witness((1,), abs(s[0] * sigma), 0.0))
    if s[1] < -tol:
        return _not_realizable("s2>=0", Witness((2,), 0.0, s[1] * sigma**2))
    if s[2] < -tol:
        return _not_realizable("s3>=0", Witness((3,), 0.0, s[2] * sigma**3))
    lhs, rhs = s[1] ** 2, 4 * s[3]
    if lhs > rhs + tol:
        return _not_realizable("s2^2<=4s4", Witness((2, 4), lhs * sigma**4, rhs * sigma**4))
    return _realizable("trace0_n4")


def decide_trace0_n5(spectrum, tol: float = DEFAULT_TOL) -> Decision:
    """Zero-trace order 5: the order-4 clauses plus
    ``12 s_5 + 5 s_3 sqrt(4 s_4 - s_2^2) >= 5 s_2 s_3``."""
    sp = as_spectrum(spectrum, tol)
    _require_n(sp, 5)
    s, sigma = _normalized_moments(sp, 5, tol)
    if abs(s[0]) > tol:
        return _inapplicable("trace is not zero", Witness((1,), abs(s[0] * sigma), 0.0))
    if s[1] < -tol:
        return _not_realizable("s2>=0", Witness((2,), 0.0, s[1] * sigma**2))
    if s[2] < -tol:
        return _not_realizable("s3>=0", Witness((3,), 0.0, s[2] * sigma**3))
    if s[1] ** 2 > 4 * s[3] + tol:
        return _not_realizable(
            "s2^2<=4s4", Witness((2, 4), s[1] ** 2 * sigma**4, 4 * s[3] * sigma**4)
        )
    gap = (max(4 * s[3] - s[1] ** 2, 0.0)) ** 0.5
    lhs = 5 * s[1] * s[2]
    rhs = 12 * s[4] + 5 * s[2] * gap
    if lhs > rhs + tol:
        return _not_realizable(
            "12s5+5s3*sqrt(4s4-s2^2)>=5s2s3",
            Witness((5,), lhs * sigma**5, rhs * sigma**5),
        )
    return _realizable("trace0_n5")


def decide_coeff_gap(p_or_coeffs, p: int, tol: float = DEFAULT_TOL) -> Decision:
    """Polynomials ``x^n + k_p x^(n-p) + ... + k_n`` with
    ``2 <= p <= n <= 2p + 1``: realizable exactly when

    * ``k_p, ..., k_{2p-1} <= 0`` (indices up to ``n``),
    * ``k_{2p} <= k_p^2 / 4`` when ``2p <= n``,
    * ``k_{2p+1} <= k_p k_{p+1}`` when ``k_{2p} <= 0``, and otherwise
      ``k_{2p+1} <= k_{p+1} (k_p/2 - sqrt(k_p^2/4 - k_{2p}))``
      (when ``2p + 1 <= n``).

    The leading coefficients ``k_1..k_{p-1}`` must vanish; otherwise the
    characterization does not apply.
    """
    coeffs = (
        p_or_coeffs.k
        if isinstance(p_or_coeffs, MonicPolynomialCoeffs)
        else tuple(float(x) for x in p_or_coeffs)
    )
    n = len(coeffs)
    if not 2 <= p <= n <= 2 * p + 1:
        raise InvalidParameter(f"need 2 <= p <= n <= 2p+1, got p={p}, n={n}")
    sigma = max(1.0, max(abs(c) ** (1.0 / (j + 1)) for j, c in enumerate(coeffs)))
    k = [0.0, *(c / sigma ** (j + 1) for j, c in enumerate(coeffs))]  # 1-based
    if any(abs(k[j]) > tol for j in range(1, p)):
        return _inapplicable("leading coefficients k_1..k_{p-1} do not vanish")
    for j in range(p, min(2 * p - 1, n) + 1):
        if k[j] > tol:
            return _not_realizable(
                f"k{j}<=0", Witness((j,), k[j] * sigma**j, 0.0)
            )
    if 2 * p <= n:
        lhs, rhs = k[2 * p], k[p] ** 2 / 4
        if lhs > rhs + tol:
            return _not_realizable(
                "k2p<=kp^2/4",
                Witness((2 * p,), lhs * sigma ** (2 * p), rhs * sigma ** (2 * p)),
            )
    if 2 * p + 1 <= n:
        if k[2 * p] <= 0:
            bound = k[p] * k[p + 1]
        else:
            root = max(k[p] ** 2 / 4 - k[2 * p], 0.0) ** 0.5
            bound = k[p + 1] * (k[p] / 2 - root)
        if k[2 * p + 1] > bound + tol:
            return _not_realizable(
                "k2p+1_bound",
                Witness(
                    (2 * p + 1,),
                    k[2 * p + 1] * sigma ** (2 * p + 1),
                    bound * sigma ** (2 * p + 1),
                ),
            )
    return _realizable("coeff_gap")


def decide_sniep_n5_gated(spectrum, tol: float = DEFAULT_TOL) -> Decision:
    """Symmetric realizability for real order-5 lists with
    ``2 s_1 >= lambda_1``: realizable exactly when a dominant real value
    exists, ``lambda_2 + lambda_5 <= s_1`` and ``lambda_3 <= s_1``.
    Outside the gate the characterization is silent."""
    sp = as_spectrum(spectrum, tol)
    _require_n(sp, 5)
    lam = _sorted_reals(sp, tol)
    if lam is None:
        return _inapplicable("requires a real spectrum")
    eps = tol * sp.scale
    s1 = sum(lam)
    if 2 * s1 < lam[0] - eps:
        return _inapplicable("gate 2*s1 >= lambda_1 fails", Witness((), lam[0], 2 * s1))
    if lam[0] < abs(lam[4]) - eps:
        return _not_realizable("perron", Witness((), abs(lam[4]), lam[0]))
    if lam[1] + lam[4] > s1 + eps:
        return _not_realizable(
            "lambda2+lambda5<=trace", Witness((2, 5), lam[1] + lam[4], s1)
        )
    if lam[2] > s1 + eps:
        return _not_realizable("lambda3<=trace", Witness((3,), lam[2], s1))
    return _realizable("sniep_n5_gated")


def decide_trace0_sniep_n5(spectrum, tol: float = DEFAULT_TOL) -> Decision:
    """Symmetric realizability for zero-trace real order-5 lists:
    realizable exactly when ``lambda_2 + lambda_5 <= 0`` and ``s_3 >= 0``."""
    sp = as_spectrum(spectrum, tol)
    _require_n(sp, 5)
    lam = _sorted_reals(sp, tol)
    if lam is None:
        return _inapplicable("requires a real spectrum")
    eps = tol * sp.scale
    s1 = sum(lam)
    if abs(s1) > eps:
        return _inapplicable("trace is not zero", Witness((1,), abs(s1), 0.0))
    if lam[1] + lam[4] > eps:
        return _not_realizable(
            "lambda2+lambda5<=0", Witness((2, 5), lam[1] + lam[4], 0.0)
        )
    s3 = sum(x**3 for x in lam)
    if s3 < -eps * sp.scale**2:
        return _not_realizable("s3>=0", Witness((3,), 0.0, s3))
    return _realizable("trace0_sniep_n5")


def decide_diag_n3(spectrum, diag, tol: float = DEFAULT_TOL) -> Decision:
    """Order-3 real spectra with prescribed diagonal ``d``: realizable
    exactly when ``0 <= d_i <= lambda_1``, the sums agree, the off-diagonal
    pair products satisfy ``e_2(d) >= e_2(lambda)`` and
    ``max(d) >= lambda_2``."""
    sp = as_spectrum(spectrum, tol)
    _require_n(sp, 3)
    d = _as_diag(diag)
    if len(d) != 3:
        raise DimensionMismatch(f"need 3 diagonal entries, got {len(d)}")
    lam = _sorted_reals(sp, tol)
    if lam is None:
        return _inapplicable("requires a real spectrum")
    eps = tol * max(sp.scale, scale_of(d))
    if any(x < -eps or x > lam[0] + eps for x in d):
        return _not_realizable("0<=d<=lambda1", Witness((), max(d), lam[0]))
    if abs(sum(d) - sum(lam)) > eps:
        return _not_realizable("sum(d)=sum(lambda)", Witness((), sum(d), sum(lam)))
    e2_d = d[0] * d[1] + d[0] * d[2] + d[1] * d[2]
    e2_l = lam[0] * lam[1] + lam[0] * lam[2] + lam[1] * lam[2]
    if e2_d < e2_l - eps * max(sp.scale, scale_of(d)):
        return _not_realizable("pair_products", Witness((2,), e2_l, e2_d))
    if max(d) < lam[1] - eps:
        return _not_realizable("max(d)>=lambda2", Witness((2,), lam[1], max(d)))
    return _realizable("diag_n3")


def decide_sym_diag_n3(spectrum, diag, tol: float = DEFAULT_TOL) -> Decision:
    """Order-3 symmetric realizability with prescribed diagonal: the sorted
    spectrum must majorize the sorted diagonal and ``d_1 >= lambda_2``.
    Negative diagonal entries are immediately non-realizable (a symmetric
    nonnegative matrix has a nonnegative diagonal)."""
    sp = as_spectrum(spectrum, tol)
    _require_n(sp, 3)
    d = tuple(sorted(_as_diag(diag), reverse=True))
    if len(d) != 3:
        raise DimensionMismatch(f"need 3 diagonal entries, got {len(d)}")
    lam = _sorted_reals(sp, tol)
    if lam is None:
        return _inapplicable("requires a real spectrum")
    eps = tol * max(sp.scale, scale_of(d))
    if d[2] < -eps:
        return _not_realizable("d>=0", Witness((3,), 0.0, d[2]))
    if lam[0] < d[0] - eps or lam[0] + lam[1] < d[0] + d[1] - eps:
        return _not_realizable("majorization", Witness((), d[0], lam[0]))
    if abs(sum(lam) - sum(d)) > eps:
        return _not_realizable("sum(d)=sum(lambda)", Witness((), sum(d), sum(lam)))
    if d[0] < lam[1] - eps:
        return _not_realizable("d1>=lambda2", Witness((1,), lam[1], d[0]))
    return _realizable("sym_diag_n3")


FAMILIES = {
    "n3": ("spectrum", decide_niep_n3),
    "rn4": ("spectrum", decide_rniep_n_le4),
    "t0n4": ("spectrum", decide_trace0_n4),
    "t0n5": ("spectrum", decide_trace0_n5),
    "coeffgap": ("coeffs", decide_coeff_gap),
    "sn5": ("spectrum", decide_sniep_n5_gated),
    "t0sn5": ("spectrum", decide_trace0_sniep_n5),
    "diag3": ("spectrum+diag", decide_diag_n3),
    "symdiag3": ("spectrum+diag", decide_sym_diag_n3),
}
