"""Single-eigenvalue regions for stochastic and doubly stochastic matrices.

``Pi_k`` denotes the convex hull of the k-th roots of unity.  The union of
these hulls up to ``n`` is the classical inner description of the region of
single eigenvalues of n-by-n doubly stochastic matrices; it is known exact
for ``n <= 4`` and strictly too small for ``n = 5``, so membership answers
carry an exactness flag.

For row-stochastic matrices only the order-3 region is described exactly
here; for general ``n`` the module exposes the tangent-line inequality
``a + |b| tan(pi/n) <= 1`` for ``a + bi`` non-real, which is necessary but
not sufficient.  The full boundary arcs are out of scope.
"""

from __future__ import annotations

import cmath
import math

from .errors import InvalidParameter
from .reports import ConditionReport, Witness, inapplicable, satisfied, violated
from .spectrum import DEFAULT_TOL


def roots_of_unity(k: int) -> tuple[complex, ...]:
    """The k-th roots of unity, counterclockwise from 1."""
    if k < 1:
        raise InvalidParameter("k must be at least 1")
    return tuple(cmath.exp(2j * math.pi * j / k) for j in range(k))


def in_pi_k(z: complex, k: int, tol: float = DEFAULT_TOL) -> bool:
    """Membership of ``z`` in the convex hull of the k-th roots of unity.

    Half-plane tests against the polygon edges for ``k >= 3``, a segment
    test for ``k = 2`` and a point test for ``k = 1``.  Points within
    ``tol`` of the boundary count as inside (the regions are closed).
    """
    z = complex(z)
    if k < 1:
        raise InvalidParameter("k must be at least 1")
    if k == 1:
        return abs(z - 1) <= tol
    if k == 2:
        return abs(z.imag) <= tol and -1 - tol <= z.real <= 1 + tol
    verts = roots_of_unity(k)
    for j in range(k):
        a, b = verts[j], verts[(j + 1) % k]
        edge = b - a
        # signed distance of z to the edge line; vertices are CCW so the
        # interior is on the positive side
        cross = edge.real * (z - a).imag - edge.imag * (z - a).real
        if cross / abs(edge) < -tol:
            return False
    return True


def in_perfect_mirsky(z: complex, n: int, tol: float = DEFAULT_TOL) -> tuple[bool, bool]:
    """Membership of ``z`` in the union of root-of-unity hulls up to ``n``.

    Returns ``(member, exact)``.  ``exact`` is True for ``n <= 4``, where
    the union is known to equal the doubly stochastic single-eigenvalue
    region; for ``n >= 5`` the union is only an inner approximation (a point
    outside it at ``n = 5`` can still be an eigenvalue).
    """
    if n < 1:
        raise InvalidParameter("n must be at least 1")
    member = any(in_pi_k(z, k, tol) for k in range(1, n + 1))
    return member, n <= 4


def dd_karpelevich_necessary(
    z: complex, n: int, tol: float = DEFAULT_TOL
) -> ConditionReport:
    """Tangent-line test for eigenvalues of n-by-n stochastic matrices:
    a non-real ``z = a + bi`` must satisfy ``a + |b| tan(pi/n) <= 1``.

    Violated proves ``z`` is not such an eigenvalue; Satisfied proves
    nothing.  Real ``z`` gives Inapplicable.
    """
    z = complex(z)
    if n < 2:
        raise InvalidParameter("n must be at least 2")
    if abs(z.imag) <= tol:
        return inapplicable("dd_karpelevich", "real point; the bound only binds non-real values")
    if n == 2:
        # all eigenvalues of 2-by-2 stochastic matrices are real
        return violated("dd_karpelevich", Witness((n,), abs(z.imag), 0.0))
    lhs = z.real + abs(z.imag) * math.tan(math.pi / n)
    witness = Witness((n,), lhs, 1.0)
    if lhs > 1 + tol:
        return violated("dd_karpelevich", witness)
    return satisfied("dd_karpelevich", witness)


def kellogg_stephens_bound(
    z: complex, m: int, rho: float, tol: float = DEFAULT_TOL
) -> ConditionReport:
    """Circuit-length bound for a nonnegative matrix with spectral radius
    ``rho`` whose digraph has longest simple circuit ``m``: eigenvalues are
    real when ``m = 2``, and satisfy ``a + |b| tan(pi/m) <= rho`` when
    ``m > 2``."""
    z = complex(z)
    if m < 2:
        raise InvalidParameter("m must be at least 2")
    if rho <= 0:
        raise InvalidParameter("rho must be positive")
    if m == 2:
        if abs(z.imag) > tol:
            return violated("kellogg_stephens", Witness((m,), abs(z.imag), 0.0))
        return satisfied("kellogg_stephens")
    lhs = z.real + abs(z.imag) * math.tan(math.pi / m)
    witness = Witness((m,), lhs, rho)
    if lhs > rho + tol:
        return violated("kellogg_stephens", witness)
    return satisfied("kellogg_stephens", witness)


def theta3_membership(z: complex, tol: float = DEFAULT_TOL) -> bool:
    """Exact region of single eigenvalues of 3-by-3 stochastic matrices:
    the triangle of cube roots of unity together with the real segment
    ``[-1, 1]``."""
    z = complex(z)
    if abs(z.imag) <= tol and -1 - tol <= z.real <= 1 + tol:
        return True
    return in_pi_k(z, 3, tol)
