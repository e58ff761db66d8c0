"""Independent oracles for the test suite.

Everything here is deliberately written against different primitives than
the package: polynomial expansion by convolution, hull membership by
nonnegative least squares, matching by exhaustive enumeration, and roots of
stochastic matrices by deflating the known eigenvalue 1 and solving the
remaining cubic/quadratic in closed form.
"""

from __future__ import annotations

import cmath
import itertools
import math

import numpy as np
from scipy.optimize import nnls


def poly_from_roots(roots):
    """Monic coefficients ``k_1..k_n`` of ``prod (x - r)`` by convolution."""
    c = np.array([1.0 + 0.0j])
    for r in roots:
        c = np.convolve(c, [1.0, -complex(r)])
    assert np.max(np.abs(c.imag)) < 1e-9 * max(1.0, np.max(np.abs(c.real)))
    return tuple(c.real[1:])


def moments_direct(values, K):
    vals = np.asarray(values, dtype=complex)
    out = []
    for k in range(1, K + 1):
        out.append(float((vals**k).sum().real))
    return tuple(out)


def hull_contains_nnls(z, k, tol=1e-7):
    """Membership of z in the hull of the k-th roots of unity, by solving
    the convex-combination system with nonnegative least squares."""
    verts = [cmath.exp(2j * math.pi * j / k) for j in range(k)]
    a = np.array(
        [[v.real for v in verts], [v.imag for v in verts], [1.0] * k]
    )
    b = np.array([complex(z).real, complex(z).imag, 1.0])
    _, resid = nnls(a, b)
    return resid <= tol


def exhaustive_matching(vertex_count, edges):
    """Largest set of pairwise disjoint edges, by brute force."""
    best = 0
    for size in range(len(edges), 0, -1):
        if size <= best or 2 * size > vertex_count:
            continue
        for combo in itertools.combinations(edges, size):
            seen = set()
            ok = True
            for u, v in combo:
                if u in seen or v in seen:
                    ok = False
                    break
                seen.add(u)
                seen.add(v)
            if ok:
                best = size
                break
        if best:
            break
    return best


def _quadratic_roots(b, c):
    # x^2 + b x + c
    disc = b * b - 4 * c
    if disc >= 0:
        r = math.sqrt(disc)
        return [(-b + r) / 2, (-b - r) / 2]
    r = math.sqrt(-disc)
    return [complex(-b / 2, r / 2), complex(-b / 2, -r / 2)]


def _cubic_roots(a, b, c):
    """Roots of x^3 + a x^2 + b x + c with real coefficients, by the
    trigonometric/hyperbolic version of the classical formula (keeps real
    roots exactly real, complex roots exactly conjugate)."""
    p = b - a * a / 3.0
    q = 2.0 * a**3 / 27.0 - a * b / 3.0 + c
    shift = -a / 3.0
    if abs(p) < 1e-14 and abs(q) < 1e-14:
        return [shift, shift, shift]
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if disc > 0:
        # one real root, one conjugate pair
        u = -q / 2.0 + math.sqrt(disc)
        v = -q / 2.0 - math.sqrt(disc)
        cu = math.copysign(abs(u) ** (1.0 / 3.0), u)
        cv = math.copysign(abs(v) ** (1.0 / 3.0), v)
        real_root = cu + cv + shift
        re = -(cu + cv) / 2.0 + shift
        im = math.sqrt(3.0) / 2.0 * (cu - cv)
        return [real_root, complex(re, im), complex(re, -im)]
    # three real roots
    r = math.sqrt(-(p**3) / 27.0)
    phi = math.acos(max(-1.0, min(1.0, -q / (2.0 * r))))
    m = 2.0 * math.sqrt(-p / 3.0)
    return [m * math.cos((phi + 2.0 * math.pi * j) / 3.0) + shift for j in range(3)]


def stochastic_roots(a):
    """All eigenvalues of a row-stochastic matrix of order <= 4: divide the
    characteristic polynomial by its known root 1, then solve the quotient
    in closed form."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    # coefficients of det(xI - A) via trace recursion
    s = []
    power = np.eye(n)
    for _ in range(n):
        power = power @ a
        s.append(float(np.trace(power)))
    k = []
    for m in range(1, n + 1):
        acc = s[m - 1] + sum(k[j] * s[m - 2 - j] for j in range(m - 1))
        k.append(-acc / m)
    coeffs = [1.0, *k]
    # synthetic division by (x - 1)
    quotient = [coeffs[0]]
    for c in coeffs[1:-1]:
        quotient.append(c + quotient[-1])
    deg = len(quotient) - 1
    if deg == 0:
        return [1.0]
    if deg == 1:
        return [1.0, -quotient[1] / quotient[0]]
    if deg == 2:
        return [1.0, *_quadratic_roots(quotient[1], quotient[2])]
    return [1.0, *_cubic_roots(quotient[1], quotient[2], quotient[3])]


def random_suleimanova(rng, n_max=10, boundary_share=0.2):
    """A real list with one dominant head absorbing the negative mass."""
    n = int(rng.integers(1, n_max + 1))
    negs = -rng.uniform(0.0, 1.0, size=n - 1)
    zero_mask = rng.uniform(size=n - 1) < 0.2
    negs[zero_mask] = 0.0
    extra = 0.0 if rng.uniform() < boundary_share else float(rng.uniform(0.0, 2.0))
    head = float(-negs.sum() + extra)
    head = max(head, float(np.max(-negs, initial=0.0)))
    return [head, *negs.tolist()]


def random_bipartite_graph(rng, max_vertices=8, p=0.5):
    n = int(rng.integers(2, max_vertices + 1))
    split = int(rng.integers(1, n))
    left = list(range(1, split + 1))
    right = list(range(split + 1, n + 1))
    edges = [(u, v) for u in left for v in right if rng.uniform() < p]
    return n, edges


def random_conjugate_closed(rng, n_max=8, scale=2.0):
    """Random conjugate-closed value list with a few real values and a few
    conjugate pairs."""
    n_pairs = int(rng.integers(0, n_max // 2 + 1))
    n_real = int(rng.integers(1, n_max - 2 * n_pairs + 1)) if n_max > 2 * n_pairs else 1
    vals = [complex(rng.uniform(-scale, scale), 0.0) for _ in range(n_real)]
    for _ in range(n_pairs):
        z = complex(rng.uniform(-scale, scale), rng.uniform(0.01, scale))
        vals.extend([z, z.conjugate()])
    return vals
