"""Checkable sufficient conditions for real spectra.

A sufficient condition that fires returns Realizable; one that does not
fire returns Undetermined, never NotRealizable.  The registry at the bottom
is the extension point for further conditions of this kind.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidParameter
from .reports import Decision, DecisionVerdict, Witness
from .spectrum import DEFAULT_TOL, as_spectrum, charpoly_of_matrix, coeffs_from_spectrum, as_square, scale_of

EXHAUSTIVE_ASSIGNMENT_CAP = 10**6


@dataclass(frozen=True)
class Partition:
    """Blocks ``(head, tail)`` with nonpositive tails; the heads and tails
    together must reproduce the input multiset."""

    blocks: tuple[tuple[float, tuple[float, ...]], ...]

    def all_values(self) -> list[float]:
        out = []
        for head, tail in self.blocks:
            out.append(head)
            out.extend(tail)
        return out


@dataclass(frozen=True)
class BaseRealization:
    """A user-supplied nonnegative matrix certifying part of a spectrum.

    The diagonal is read off the matrix; construction verifies entrywise
    nonnegativity and that the characteristic polynomial matches the claimed
    spectrum.
    """

    matrix: tuple[tuple[float, ...], ...]
    spectrum: tuple[float, ...]
    diagonal: tuple[float, ...] = field(default=())

    def __post_init__(self):
        a = as_square(self.matrix)
        if len(self.spectrum) != a.shape[0]:
            raise DimensionMismatch("spectrum size must match matrix order")
        tol = DEFAULT_TOL * max(1.0, float(np.abs(a).max()))
        if a.min() < -tol:
            raise InvalidParameter(f"matrix has a negative entry {a.min()}")
        got = np.array(charpoly_of_matrix(a).k)
        want = np.array(coeffs_from_spectrum(self.spectrum).k)
        sigma = max(1.0, max(abs(v) for v in self.spectrum))
        resid = float(np.max(np.abs(got - want) / sigma ** np.arange(1, a.shape[0] + 1)))
        if resid > 1e-8:
            raise InvalidParameter(
                f"matrix does not realize the claimed spectrum (residual {resid:.3g})"
            )
        object.__setattr__(self, "matrix", tuple(tuple(float(x) for x in row) for row in a))
        object.__setattr__(self, "diagonal", tuple(float(x) for x in np.diag(a)))

    @property
    def order(self) -> int:
        return len(self.diagonal)


def _undetermined(reason: str, witness: Witness | None = None) -> Decision:
    return Decision(DecisionVerdict.UNDETERMINED, reason, witness)


def _sorted_real(spectrum, tol: float) -> tuple[tuple[float, ...], float] | None:
    sp = as_spectrum(spectrum, tol)
    if not sp.is_real(tol):
        return None
    vals = tuple(sorted((v.real for v in sp.values), reverse=True))
    return vals, tol * sp.scale


def check_suleimanova(spectrum, tol: float = DEFAULT_TOL) -> Decision:
    """One dominant head, everything else nonpositive, and the head absorbs
    the negative mass: ``lam_1 + sum of negative values >= 0``.  Fires
    Realizable; such spectra admit a nonnegative companion realization."""
    got = _sorted_real(spectrum, tol)
    if got is None:
        return _undetermined("requires a real spectrum")
    vals, eps = got
    head, rest = vals[0], vals[1:]
    if any(x > eps for x in rest):
        return _undetermined("more than one positive value", Witness((), max(rest), 0.0))
    if head < abs(vals[-1]) - eps:
        return _undetermined("head does not dominate moduli", Witness((), abs(vals[-1]), head))
    total = head + sum(x for x in rest if x < 0)
    if total < -eps:
        return _undetermined("head+negatives<0", Witness((), 0.0, total))
    return Decision(DecisionVerdict.REALIZABLE, "suleimanova", Witness((), 0.0, total))


def _greedy_partition(heads: list[float], negatives: list[float], eps: float) -> Partition | None:
    budgets = list(heads)
    tails: list[list[float]] = [[] for _ in heads]
    for x in sorted(negatives):  # most negative first
        j = max(range(len(budgets)), key=lambda i: (budgets[i], -i))
        if budgets[j] + x < -eps:
            return None
        budgets[j] += x
        tails[j].append(x)
    return Partition(tuple((h, tuple(t)) for h, t in zip(heads, tails)))


def _exhaustive_partition(heads: list[float], negatives: list[float], eps: float) -> Partition | None:
    r, m = len(heads), len(negatives)
    if r == 0 or r**m > EXHAUSTIVE_ASSIGNMENT_CAP:
        return None
    for assignment in itertools.product(range(r), repeat=m):
        budgets = list(heads)
        ok = True
        for x, j in zip(negatives, assignment):
            budgets[j] += x
            if budgets[j] < -eps:
                ok = False
                break
        if ok:
            tails: list[list[float]] = [[] for _ in heads]
            for x, j in zip(negatives, assignment):
                tails[j].append(x)
            return Partition(tuple((h, tuple(sorted(t))) for h, t in zip(heads, tails)))
    return None


def check_suleimanova_perfect(
    spectrum,
    partition: Partition | None = None,
    tol: float = DEFAULT_TOL,
    exhaustive: bool = False,
) -> Decision:
    """Blockwise head-absorbs-negatives condition: a partition into blocks
    ``{head_j} + nonpositive tail`` with ``head_j + sum(tail_j) >= 0`` for
    every block, together with a globally dominant largest value, certifies
    realizability.

    With no partition supplied, a greedy search assigns negatives (largest
    magnitude first) to the head with the largest remaining budget;
    ``exhaustive=True`` additionally tries all assignments up to a fixed
    cap.  Search failure is Undetermined, never NotRealizable.
    """
    got = _sorted_real(spectrum, tol)
    if got is None:
        return _undetermined("requires a real spectrum")
    vals, eps = got
    if vals[0] < abs(vals[-1]) - eps:
        return _undetermined("largest value does not dominate moduli")

    if partition is not None:
        claimed = sorted(partition.all_values())
        if not np.allclose(claimed, sorted(vals), atol=eps, rtol=0):
            raise InvalidParameter("partition does not reproduce the input multiset")
        for head, tail in partition.blocks:
            if any(x > eps for x in tail):
                raise InvalidParameter(f"tail entry {max(tail)} is positive")
            slack = head + sum(tail)
            if slack < -eps:
                return _undetermined(
                    "block inequality fails", Witness((), 0.0, slack)
                )
        return Decision(
            DecisionVerdict.REALIZABLE, "suleimanova_perfect", flags={"partition": partition}
        )

    heads = [x for x in vals if x > eps]
    negatives = [x for x in vals if x <= eps]
    if not heads:
        heads, negatives = [vals[0]], list(vals[1:])
    found = _greedy_partition(heads, negatives, eps)
    if found is None and exhaustive:
        found = _exhaustive_partition(heads, negatives, eps)
    if found is None:
        return _undetermined("no feasible head assignment found")
    return Decision(
        DecisionVerdict.REALIZABLE, "suleimanova_perfect", flags={"partition": found}
    )


def check_perfect2(
    base: BaseRealization,
    tails: Sequence[Sequence[float]],
    tol: float = DEFAULT_TOL,
) -> Decision:
    """Diagonal-absorbs-tail condition on top of a known realization.

    Given a nonnegative matrix with spectrum ``{lam_1..lam_r}`` and diagonal
    ``d_1..d_r``, appending a nonpositive tail to each block keeps the union
    realizable provided ``d_j + sum(tail_j) >= 0`` for every ``j``, the
    largest value of the union dominates all moduli, and the union sums to
    a nonnegative number.  The decision carries a ``perfect2_plus`` flag
    when every base value is nonnegative.
    """
    if len(tails) != base.order:
        raise DimensionMismatch(f"need {base.order} tails, got {len(tails)}")
    tails = [tuple(float(x) for x in t) for t in tails]
    union = list(base.spectrum) + [x for t in tails for x in t]
    eps = tol * scale_of(union)
    for j, t in enumerate(tails):
        if any(x > eps for x in t):
            raise InvalidParameter(f"tail {j} has a positive entry")
    plus = all(x >= -eps for x in base.spectrum)
    for j, t in enumerate(tails):
        slack = base.diagonal[j] + sum(t)
        if slack < -eps:
            return _undetermined(f"d_{j + 1}+tail<0", Witness((j + 1,), 0.0, slack))
    lam1 = max(union)
    if lam1 < max(abs(x) for x in union) - eps:
        return _undetermined("largest value does not dominate moduli")
    if sum(union) < -eps:
        return _undetermined("union trace negative", Witness((1,), 0.0, sum(union)))
    return Decision(
        DecisionVerdict.REALIZABLE,
        "perfect2",
        flags={"perfect2_plus": plus, "union": tuple(sorted(union, reverse=True))},
    )


CONDITIONS = {
    "suleimanova": check_suleimanova,
    "suleimanova-perfect": check_suleimanova_perfect,
    "perfect2": check_perfect2,
}
