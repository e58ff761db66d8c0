"""Necessary conditions for a multiset to be the spectrum of an entrywise
nonnegative matrix.

Implemented checks, each returning a :class:`~niep.reports.ConditionReport`:

* reality      -- the multiset equals its conjugate
* trace        -- ``s_1 >= 0``
* moments      -- ``s_k >= 0`` for ``k`` up to a configured bound
* perron       -- a real value dominates every modulus
* jll          -- ``s_k**m <= n**(m-1) * s_{k*m}`` plus the qualitative rule
                  ``s_p > 0  implies  s_{p*q} > 0``
* newton_h     -- Newton inequalities for the reflected list ``rho - v``
                  (valid because ``rho*I - A`` is an M-matrix)
* taamp        -- sharp bounds on the first three polynomial coefficients
* cl           -- ``Phi = n^2 s_3 - 3 n s_1 s_2 + 2 s_1^3
                  + (n-2)/sqrt(n-1) * (n s_2 - s_1^2)^(3/2) >= 0``
* lm_refined   -- ``s_p^2 <= p * floor(n/p) * s_{2p}`` whenever
                  ``s_1 = ... = s_{p-1} = 0``

Every inequality is homogeneous in the spectrum scale, so comparisons run on
data normalized by ``max(1, max|v|)`` with a single absolute tolerance;
witnesses are reported in the original scale.

Passing all checks never proves realizability: the aggregate verdict is
either NotRealizable or Undecided.

Checks that need only power sums can also run straight from moment data
(:func:`run_all_necessary_from_moments`), e.g. on traces of matrix powers,
with no eigensolver involved; the eigenvalue-based checks then report
Inapplicable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import UnpairedConjugate
from .reports import (
    ConditionReport,
    ConditionVerdict,
    DecisionVerdict,
    Witness,
    inapplicable,
    satisfied,
    violated,
)
from .spectrum import (
    DEFAULT_TOL,
    Moments,
    Spectrum,
    as_spectrum,
    coeffs_from_moments,
    elementary_symmetric,
    scale_from_moments,
)

CONDITION_ORDER = (
    "reality",
    "trace",
    "moments",
    "perron",
    "jll",
    "newton_h",
    "taamp",
    "cl",
    "lm_refined",
)


@dataclass(frozen=True)
class CheckConfig:
    """Tolerance and index bounds for the condition checks.

    The power-sum conditions quantify over all indices; ``jll_km_bound``
    caps the examined products ``k*m`` and ``moment_bound`` caps the moment
    index (``None`` means ``2n``).  Verdicts are scoped to these bounds.
    """

    tol: float = DEFAULT_TOL
    jll_km_bound: int = 20
    moment_bound: int | None = None

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.jll_km_bound < 1:
            raise ValueError("jll_km_bound must be at least 1")
        if self.moment_bound is not None and self.moment_bound < 1:
            raise ValueError("moment_bound must be at least 1")

    def resolved_moment_bound(self, n: int) -> int:
        return self.moment_bound if self.moment_bound is not None else 2 * n


@dataclass(frozen=True)
class _View:
    """Normalized data shared by the checks.

    ``s[k-1]`` holds the k-th power sum of the spectrum divided by
    ``sigma**k`` with ``sigma = max(1, scale)``; original-scale witnesses
    are recovered as ``value * sigma**degree``.

    The power-sum inequalities additionally need positivity classification
    of high-order sums, which the ``max(1, .)`` clamp would distort for
    spectra below unit scale (their tail sums underflow any absolute
    tolerance); ``s_jll`` therefore carries the sums normalized so that the
    dominant modulus itself is 1.
    """

    n: int
    sigma: float
    s: tuple[float, ...]
    jll_sigma: float
    s_jll: tuple[float, ...]
    coeffs: tuple[float, ...]  # k_1..k_min(n,3), normalized by sigma
    spectrum: Spectrum | None

    def moment(self, k: int) -> float:
        return self.s[k - 1]


def _needed_moments(n: int, cfg: CheckConfig) -> int:
    return max(cfg.jll_km_bound, cfg.resolved_moment_bound(n), 2 * (n // 2), min(n, 3))


def _view_from_spectrum(sp: Spectrum, cfg: CheckConfig) -> _View:
    sigma = sp.scale
    vals = np.asarray(sp.values, dtype=complex) / sigma
    K = _needed_moments(sp.n, cfg)
    s = []
    power = np.ones_like(vals)
    for _ in range(K):
        power = power * vals
        s.append(float(power.sum().real))
    maxmod = sp.max_modulus
    jll_sigma = maxmod if maxmod > cfg.tol else 1.0
    ratio = sigma / jll_sigma
    s_jll = tuple(x * ratio ** (k + 1) for k, x in enumerate(s))
    sym = elementary_symmetric(Spectrum(tuple(vals), sp.perron_index), cfg.tol)
    ncoef = min(sp.n, 3)
    coeffs = tuple((-1) ** j * sym.E[j - 1] for j in range(1, ncoef + 1))
    return _View(
        n=sp.n,
        sigma=sigma,
        s=tuple(s),
        jll_sigma=jll_sigma,
        s_jll=s_jll,
        coeffs=coeffs,
        spectrum=sp,
    )


def _view_from_moments(s: Sequence[float], n: int, cfg: CheckConfig) -> _View:
    raw = tuple(float(x) for x in s)
    need = _needed_moments(n, cfg)
    if len(raw) < need:
        raise ValueError(f"need at least {need} moments for order {n}, got {len(raw)}")
    sigma = scale_from_moments(raw)
    norm = tuple(x / sigma ** (k + 1) for k, x in enumerate(raw))
    est = scale_from_moments(raw, floor=0.0)
    jll_sigma = est if est > cfg.tol else 1.0
    s_jll = tuple(x / jll_sigma ** (k + 1) for k, x in enumerate(raw))
    ncoef = min(n, 3)
    coeffs = coeffs_from_moments(norm[:ncoef], ncoef).k if ncoef else ()
    return _View(
        n=n,
        sigma=sigma,
        s=norm,
        jll_sigma=jll_sigma,
        s_jll=s_jll,
        coeffs=coeffs,
        spectrum=None,
    )


# ---------------------------------------------------------------------------
# individual checks


def check_reality(spectrum, cfg: CheckConfig | None = None) -> ConditionReport:
    """Conjugate closure of the multiset."""
    cfg = cfg or CheckConfig()
    try:
        as_spectrum(spectrum, cfg.tol)
    except UnpairedConjugate as exc:
        residue = abs(complex(exc.value).imag)
        return violated(
            "reality",
            Witness((), residue, 0.0),
            detail=f"unpaired non-real value {exc.value}",
        )
    return satisfied("reality")


def _trace_report(view: _View, tol: float) -> ConditionReport:
    s1 = view.moment(1)
    if s1 < -tol:
        return violated("trace", Witness((1,), 0.0, s1 * view.sigma))
    return satisfied("trace", Witness((1,), 0.0, s1 * view.sigma))


def check_trace(spectrum, cfg: CheckConfig | None = None) -> ConditionReport:
    """Nonnegative trace: ``s_1 >= 0``."""
    cfg = cfg or CheckConfig()
    return _trace_report(_view_from_spectrum(as_spectrum(spectrum, cfg.tol), cfg), cfg.tol)


def _moments_report(view: _View, cfg: CheckConfig) -> ConditionReport:
    bound = min(cfg.resolved_moment_bound(view.n), len(view.s))
    scope = {"moment_bound": bound}
    for k in range(1, bound + 1):
        sk = view.moment(k)
        if sk < -cfg.tol:
            return violated(
                "moments", Witness((k,), 0.0, sk * view.sigma**k), scope=scope
            )
    return satisfied("moments", scope=scope)


def check_moments(spectrum, cfg: CheckConfig | None = None) -> ConditionReport:
    """All power sums nonnegative: ``s_k >= 0`` for ``k`` up to the bound."""
    cfg = cfg or CheckConfig()
    return _moments_report(_view_from_spectrum(as_spectrum(spectrum, cfg.tol), cfg), cfg)


def check_perron(spectrum, cfg: CheckConfig | None = None) -> ConditionReport:
    """A real value at least as large as every modulus must be present."""
    cfg = cfg or CheckConfig()
    sp = as_spectrum(spectrum, cfg.tol)
    if sp.perron_index is not None:
        return satisfied("perron")
    bound = cfg.tol * sp.scale
    reals = [v.real for v in sp.values if abs(v.imag) <= bound]
    best = max(reals) if reals else 0.0
    return violated(
        "perron",
        Witness((), sp.max_modulus, best),
        detail="no real value attains the maximal modulus",
    )


def _jll_pairs(km_bound: int):
    pairs = [
        (k, m)
        for k in range(1, km_bound + 1)
        for m in range(1, km_bound // k + 1)
    ]
    pairs.sort(key=lambda km: (km[0] * km[1], km[0]))
    return pairs


def _jll_report(view: _View, cfg: CheckConfig) -> ConditionReport:
    n, tol = view.n, cfg.tol
    bound = min(cfg.jll_km_bound, len(view.s_jll))
    scope = {"km_bound": bound}
    for k, m in _jll_pairs(bound):
        sk, skm = view.s_jll[k - 1], view.s_jll[k * m - 1]
        lhs, rhs = sk**m, float(n) ** (m - 1) * skm
        if lhs > rhs + tol:
            return violated(
                "jll",
                Witness(
                    (k, m),
                    lhs * view.jll_sigma ** (k * m),
                    rhs * view.jll_sigma ** (k * m),
                ),
                scope=scope,
            )
        if m >= 2 and sk > tol and skm <= tol:
            return violated(
                "jll",
                Witness(
                    (k, m),
                    sk * view.jll_sigma**k,
                    skm * view.jll_sigma ** (k * m),
                ),
                detail=f"s_{k} > 0 but s_{k * m} is not positive",
                scope=scope,
            )
    return satisfied("jll", scope=scope)


def check_jll(spectrum, cfg: CheckConfig | None = None) -> ConditionReport:
    """Power-sum inequalities ``s_k**m <= n**(m-1) * s_{k*m}`` over all
    ``k*m`` up to the configured bound, plus the qualitative positivity
    propagation ``s_p > 0 => s_{p*q} > 0`` on the same range."""
    cfg = cfg or CheckConfig()
    return _jll_report(_view_from_spectrum(as_spectrum(spectrum, cfg.tol), cfg), cfg)


def check_newton_h(spectrum, cfg: CheckConfig | None = None) -> ConditionReport:
    """Newton inequalities ``c_k^2 >= c_{k-1} c_{k+1}`` for the reflected
    list ``rho - v`` with ``rho = max|v|``.

    Requires the Perron check to hold; otherwise Inapplicable.
    """
    cfg = cfg or CheckConfig()
    sp = as_spectrum(spectrum, cfg.tol)
    if sp.perron_index is None:
        return inapplicable("newton_h", "requires a dominant real value")
    sigma = sp.scale
    rho = sp.max_modulus / sigma
    shifted = tuple(rho - v / sigma for v in sp.values)
    sym = elementary_symmetric(Spectrum(shifted), cfg.tol)
    c = sym.c
    for k in range(1, sp.n):
        lhs, rhs = c[k - 1] * c[k + 1], c[k] ** 2
        if lhs > rhs + cfg.tol:
            return violated(
                "newton_h",
                Witness((k,), lhs * sigma ** (2 * k), rhs * sigma ** (2 * k)),
            )
    return satisfied("newton_h")


def _taamp_report(view: _View, tol: float) -> ConditionReport:
    n = view.n
    k1 = view.coeffs[0]
    if k1 > tol:
        return violated("taamp", Witness((1,), k1 * view.sigma, 0.0))
    if n < 2:
        return satisfied("taamp", detail="coefficient bounds beyond k_1 need n >= 2")
    k2 = view.coeffs[1]
    k2_bound = (n - 1) / (2 * n) * k1**2
    if k2 > k2_bound + tol:
        return violated(
            "taamp", Witness((2,), k2 * view.sigma**2, k2_bound * view.sigma**2)
        )
    if n < 3:
        return satisfied("taamp", detail="k_3 bound needs n >= 3")
    k3 = view.coeffs[2]
    threshold = (n - 1) * (n - 4) / (2 * (n - 2) ** 2) * k1**2
    if threshold < k2:
        base = max(k1**2 - 2 * n * k2 / (n - 1), 0.0)
        k3_bound = (n - 2) / n * (
            k1 * k2 + (n - 1) / (3 * n) * (base**1.5 - k1**3)
        )
    else:
        k3_bound = k1 * k2 - (n - 1) * (n - 3) / (3 * (n - 2) ** 2) * k1**3
    if k3 > k3_bound + tol:
        return violated(
            "taamp", Witness((3,), k3 * view.sigma**3, k3_bound * view.sigma**3)
        )
    return satisfied("taamp")


def check_taamp(spectrum, cfg: CheckConfig | None = None) -> ConditionReport:
    """Sharp upper bounds on the first three coefficients of the
    characteristic polynomial:

    ``k_1 <= 0``; ``k_2 <= (n-1)/(2n) * k_1^2``; and a two-branch bound on
    ``k_3`` selected by comparing ``k_2`` against
    ``(n-1)(n-4)/(2(n-2)^2) * k_1^2`` (equality routes to the second
    branch).  The first failing clause is reported.
    """
    cfg = cfg or CheckConfig()
    return _taamp_report(_view_from_spectrum(as_spectrum(spectrum, cfg.tol), cfg), cfg.tol)


def _cl_report(view: _View, tol: float) -> ConditionReport:
    n = view.n
    if n < 2:
        return inapplicable("cl", "needs n >= 2")
    s1, s2, s3 = view.moment(1), view.moment(2), view.moment(3)
    disc = n * s2 - s1**2
    if disc < -tol:
        return inapplicable("cl", "n*s_2 - s_1^2 is negative; bound undefined")
    phi = (
        n**2 * s3
        - 3 * n * s1 * s2
        + 2 * s1**3
        + (n - 2) / math.sqrt(n - 1) * max(disc, 0.0) ** 1.5
    )
    witness = Witness((), 0.0, phi * view.sigma**3)
    if phi < -tol:
        return violated("cl", witness)
    return satisfied("cl", witness)


def check_cl(spectrum, cfg: CheckConfig | None = None) -> ConditionReport:
    """Third-moment bound ``Phi >= 0`` with

    ``Phi = n^2 s_3 - 3 n s_1 s_2 + 2 s_1^3
    + (n-2)/sqrt(n-1) * (n s_2 - s_1^2)^(3/2)``.

    ``Phi`` is recorded as the witness value even when satisfied.  When
    ``n s_2 - s_1^2 < 0`` the fractional power is undefined and the check
    reports Inapplicable.
    """
    cfg = cfg or CheckConfig()
    return _cl_report(_view_from_spectrum(as_spectrum(spectrum, cfg.tol), cfg), cfg.tol)


def _lm_report(view: _View, tol: float) -> ConditionReport:
    n = view.n
    for p in range(1, n // 2 + 1):
        if any(abs(view.moment(j)) > tol for j in range(1, p)):
            continue
        lhs = view.moment(p) ** 2
        rhs = p * (n // p) * view.moment(2 * p)
        if lhs > rhs + tol:
            return violated(
                "lm_refined",
                Witness((p,), lhs * view.sigma ** (2 * p), rhs * view.sigma ** (2 * p)),
            )
    return satisfied("lm_refined")


def check_lm_refined(spectrum, cfg: CheckConfig | None = None) -> ConditionReport:
    """Vanishing-moment refinement of the power-sum inequalities:
    ``s_p^2 <= p * floor(n/p) * s_{2p}`` for each ``p <= n/2`` whose earlier
    moments all vanish (for ``p = 1`` this is just the ``m = 2`` power-sum
    inequality with the sharper constant)."""
    cfg = cfg or CheckConfig()
    return _lm_report(_view_from_spectrum(as_spectrum(spectrum, cfg.tol), cfg), cfg.tol)


# ---------------------------------------------------------------------------
# aggregation


@dataclass(frozen=True)
class NecessaryResult:
    reports: tuple[ConditionReport, ...]
    aggregate: DecisionVerdict

    @property
    def violated(self) -> tuple[ConditionReport, ...]:
        return tuple(r for r in self.reports if r.violated)

    def report(self, condition: str) -> ConditionReport:
        for r in self.reports:
            if r.condition == condition:
                return r
        raise KeyError(condition)

    def to_json(self) -> dict:
        return {
            "reports": [r.to_json() for r in self.reports],
            "aggregate": self.aggregate.value,
        }


def _aggregate(reports: Sequence[ConditionReport]) -> NecessaryResult:
    verdict = (
        DecisionVerdict.NOT_REALIZABLE
        if any(r.violated for r in reports)
        else DecisionVerdict.UNDECIDED
    )
    return NecessaryResult(reports=tuple(reports), aggregate=verdict)


def run_all_necessary(spectrum, cfg: CheckConfig | None = None) -> NecessaryResult:
    """Run every implemented necessary condition and aggregate.

    The aggregate is NotRealizable as soon as one condition is violated and
    Undecided otherwise; necessary conditions can never certify
    realizability.  An input that is not conjugate closed fails reality and
    makes the remaining checks Inapplicable.
    """
    cfg = cfg or CheckConfig()
    reality = check_reality(spectrum, cfg)
    if reality.violated:
        rest = [
            inapplicable(name, "requires a conjugate-closed spectrum")
            for name in CONDITION_ORDER[1:]
        ]
        return _aggregate([reality, *rest])
    sp = as_spectrum(spectrum, cfg.tol)
    view = _view_from_spectrum(sp, cfg)
    reports = [
        reality,
        _trace_report(view, cfg.tol),
        _moments_report(view, cfg),
        check_perron(sp, cfg),
        _jll_report(view, cfg),
        check_newton_h(sp, cfg),
        _taamp_report(view, cfg.tol),
        _cl_report(view, cfg.tol),
        _lm_report(view, cfg.tol),
    ]
    return _aggregate(reports)


def run_all_necessary_from_moments(
    s: Sequence[float] | Moments, n: int, cfg: CheckConfig | None = None
) -> NecessaryResult:
    """Run the power-sum and coefficient conditions straight from moment
    data ``s_1, s_2, ...`` (for instance traces of matrix powers).

    Works without any eigensolver.  Reality, the Perron check and the
    reflected Newton inequalities need the eigenvalues themselves and are
    reported Inapplicable on this path.
    """
    cfg = cfg or CheckConfig()
    raw = s.s if isinstance(s, Moments) else s
    view = _view_from_moments(raw, n, cfg)
    needs_eigen = "requires eigenvalue data"
    reports = [
        inapplicable("reality", needs_eigen),
        _trace_report(view, cfg.tol),
        _moments_report(view, cfg),
        inapplicable("perron", needs_eigen),
        _jll_report(view, cfg),
        inapplicable("newton_h", needs_eigen),
        _taamp_report(view, cfg.tol),
        _cl_report(view, cfg.tol),
        _lm_report(view, cfg.tol),
    ]
    return _aggregate(reports)
