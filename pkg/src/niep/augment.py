"""Zero-appending analysis.

Appending zero eigenvalues leaves every power sum unchanged but raises the
dimension ``n`` that enters the power-sum inequalities, so a list that
fails them at its own size may clear them after padding.  Clearing the
necessary conditions proves nothing (the classic five-element list with a
doubled head keeps failing for every padding even though the conditions
clear at one extra zero), hence the mandatory caveat carried by every
report.

For lists of nonzero values there is a complete answer at unbounded
dimension: a strictly dominant positive value, conjugate closure and the
extended trace condition together are equivalent to being the nonzero
spectrum of some primitive nonnegative matrix.  The extended trace
condition quantifies over all exponents, so its verdict is scoped by
``k_max``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .conditions import CheckConfig, NecessaryResult, check_reality, run_all_necessary
from .reports import (
    ConditionReport,
    ConditionVerdict,
    Witness,
    inapplicable,
    satisfied,
    violated,
)
from .spectrum import DEFAULT_TOL, Moments, as_spectrum, moments, scale_from_moments

CAVEAT = "clearing the implemented necessary conditions does not prove realizability"

DEFAULT_K_MAX = 40


@dataclass(frozen=True)
class AugmentReport:
    original_n: int
    zeros_added: int | None
    scope: dict
    caveat: str = CAVEAT
    result: NecessaryResult | None = None

    @property
    def found(self) -> bool:
        return self.zeros_added is not None

    def to_json(self) -> dict:
        return {
            "original_n": self.original_n,
            "zeros_added": self.zeros_added,
            "found": self.found,
            "scope": self.scope,
            "caveat": self.caveat,
        }


def extended_trace_from_moments(
    s: Sequence[float] | Moments, tol: float = DEFAULT_TOL, scale: float | None = None
) -> ConditionReport:
    """Extended trace condition on explicit power sums ``s_1..s_K``:
    every ``s_k`` nonnegative, and ``s_k > 0`` forces ``s_{k*m} > 0``
    whenever ``k*m`` stays within range.

    Witness values are reported in the units supplied; comparisons divide
    ``s_k`` by ``scale**k`` first.  Pass the dominant modulus as ``scale``
    when it is known (it is estimated from the sums otherwise); positivity
    of high-order sums cannot be classified against an absolute tolerance
    in any other units.
    """
    raw = [float(x) for x in (s.s if isinstance(s, Moments) else s)]
    k_max = len(raw)
    sigma = scale if scale is not None else scale_from_moments(raw, floor=0.0)
    if sigma <= tol:
        sigma = 1.0
    norm = [x / sigma ** (k + 1) for k, x in enumerate(raw)]
    scope = {"k_max": k_max}
    for k in range(1, k_max + 1):
        if norm[k - 1] < -tol:
            return violated(
                "extended_trace", Witness((k,), 0.0, raw[k - 1]), scope=scope
            )
    for k in range(1, k_max + 1):
        if norm[k - 1] <= tol:
            continue
        for m in range(2, k_max // k + 1):
            if norm[k * m - 1] <= tol:
                return violated(
                    "extended_trace",
                    Witness((k, m), raw[k - 1], raw[k * m - 1]),
                    detail=f"s_{k} > 0 but s_{k * m} is not positive",
                    scope=scope,
                )
    return satisfied("extended_trace", scope=scope)


def check_extended_trace(
    spectrum, k_max: int = DEFAULT_K_MAX, tol: float = DEFAULT_TOL
) -> ConditionReport:
    """Extended trace condition for a spectrum, scoped to ``k <= k_max``."""
    sp = as_spectrum(spectrum, tol)
    return extended_trace_from_moments(
        moments(sp, k_max, tol), tol, scale=sp.max_modulus
    )


def check_strict_perron(spectrum, tol: float = DEFAULT_TOL) -> ConditionReport:
    """A positive value of multiplicity one strictly dominating every other
    modulus.  The violation witness records (runner-up modulus, dominant
    modulus): strictness fails when they agree within tolerance, or when
    the dominant value is not a positive real."""
    sp = as_spectrum(spectrum, tol)
    eps = tol * sp.scale
    rho = sp.max_modulus
    top = [v for v in sp.values if abs(v) > rho - eps]
    if len(top) == 1 and abs(top[0].imag) <= eps and top[0].real > eps:
        return satisfied("strict_perron")
    moduli = sorted((abs(v) for v in sp.values), reverse=True)
    runner_up = moduli[1] if sp.n > 1 else 0.0
    return violated(
        "strict_perron",
        Witness((), runner_up, rho),
        detail="maximal modulus is not attained by a unique positive value",
    )


def check_bh_hypotheses(
    spectrum, k_max: int = DEFAULT_K_MAX, tol: float = DEFAULT_TOL
) -> tuple[ConditionReport, ConditionReport, ConditionReport]:
    """The three hypotheses equivalent (at unbounded dimension) to being
    the nonzero spectrum of a primitive nonnegative matrix: strict Perron,
    conjugate closure, extended trace.  All values must be nonzero;
    otherwise every report is Inapplicable."""
    reality = check_reality(spectrum)
    if reality.violated:
        reason = "requires a conjugate-closed list"
        return (
            inapplicable("strict_perron", reason),
            reality,
            inapplicable("extended_trace", reason),
        )
    sp = as_spectrum(spectrum, tol)
    eps = tol * sp.scale
    if any(abs(v) <= eps for v in sp.values):
        reason = "zero values present; remove them first"
        return (
            inapplicable("strict_perron", reason),
            inapplicable("reality", reason),
            inapplicable("extended_trace", reason),
        )
    return (
        check_strict_perron(sp, tol),
        reality,
        check_extended_trace(sp, k_max, tol),
    )


def nonzero_spectrum_realizable(
    spectrum, k_max: int = DEFAULT_K_MAX, tol: float = DEFAULT_TOL
) -> bool:
    """True when all three hypotheses hold within the ``k_max`` scope:
    the list is then the nonzero spectrum of some primitive nonnegative
    matrix of sufficiently large order."""
    reports = check_bh_hypotheses(spectrum, k_max, tol)
    return all(r.verdict is ConditionVerdict.SATISFIED for r in reports)


def min_zeros_for_necessary(
    spectrum, n_max: int, cfg: CheckConfig | None = None
) -> AugmentReport:
    """Smallest number of appended zeros (total size up to ``n_max``) after
    which no implemented necessary condition is violated.

    The scan reruns the full battery at each candidate size; moments do not
    change, only the dimension entering the inequalities.  ``zeros_added``
    is ``None`` when no size up to ``n_max`` clears the battery.
    """
    cfg = cfg or CheckConfig()
    sp = as_spectrum(spectrum, cfg.tol)
    if n_max < sp.n:
        raise ValueError(f"n_max = {n_max} is below the input size {sp.n}")
    scope = {
        "n_max": n_max,
        "jll_km_bound": cfg.jll_km_bound,
        "moment_bound": cfg.moment_bound,
    }
    for n in range(sp.n, n_max + 1):
        result = run_all_necessary(sp.padded(n - sp.n), cfg)
        if not result.violated:
            return AugmentReport(
                original_n=sp.n, zeros_added=n - sp.n, scope=scope, result=result
            )
    return AugmentReport(original_n=sp.n, zeros_added=None, scope=scope)
