"""Symmetric realizability subordinate to a bipartite graph.

A matrix is subordinate to ``G`` when its off-diagonal nonzero pattern is
contained in the edge set; diagonal entries are unconstrained.  For
bipartite ``G`` the decision reduces to pair sums driven by the matching
number.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidParameter, NotBipartite
from .reports import Decision, DecisionVerdict, Witness
from .spectrum import DEFAULT_TOL, scale_of


@dataclass(frozen=True)
class UndirectedGraph:
    """Loop-free undirected graph on vertices ``1..n``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidParameter("vertex_count must be positive")
        seen = set()
        canon = []
        for u, v in self.edges:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise InvalidParameter(f"edge ({u}, {v}) out of range")
            if u == v:
                raise InvalidParameter(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidParameter(f"duplicate edge {key}")
            seen.add(key)
            canon.append(key)
        object.__setattr__(self, "edges", tuple(canon))

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, tuple((i, i + 1) for i in range(1, n)))


def star_graph(leaves: int) -> UndirectedGraph:
    return UndirectedGraph(leaves + 1, tuple((1, i + 2) for i in range(leaves)))


def bipartition(g: UndirectedGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """2-coloring by breadth-first traversal, one component at a time.

    Raises :class:`NotBipartite` carrying an odd-cycle witness when a
    same-color edge shows up.
    """
    adj = g.adjacency()
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in range(1, g.vertex_count + 1):
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    raise NotBipartite(_odd_cycle(u, v, parent))
    left = tuple(v for v in range(1, g.vertex_count + 1) if color[v] == 0)
    right = tuple(v for v in range(1, g.vertex_count + 1) if color[v] == 1)
    return left, right


def _odd_cycle(u: int, v: int, parent: dict[int, int | None]) -> list[int]:
    up, vp = [u], [v]
    while parent[up[-1]] is not None:
        up.append(parent[up[-1]])
    while parent[vp[-1]] is not None:
        vp.append(parent[vp[-1]])
    shared = set(up) & set(vp)
    # walk both root paths up to the deepest common ancestor
    cut_u = next(i for i, x in enumerate(up) if x in shared)
    cut_v = next(i for i, x in enumerate(vp) if x in shared)
    return up[: cut_u + 1] + vp[:cut_v][::-1]


def matching_number(g: UndirectedGraph) -> int:
    """Maximum matching size by alternating-path augmentation over the
    bipartition.  Raises :class:`NotBipartite` for odd-cycle graphs."""
    left, _ = bipartition(g)
    adj = g.adjacency()
    match: dict[int, int | None] = {v: None for v in range(1, g.vertex_count + 1)}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if match[v] is None or augment(match[v], seen):
                match[v] = u
                match[u] = v
                return True
        return False

    size = 0
    for u in left:
        if match[u] is None and augment(u, set()):
            size += 1
    return size


def decide_bipartite_sniep(g: UndirectedGraph, values, tol: float = DEFAULT_TOL) -> Decision:
    """Existence of a symmetric nonnegative matrix subordinate to ``g``
    with the given real spectrum: with ``m`` the matching number and the
    values sorted descending, all pair sums
    ``lam_i + lam_{n-i+1} (i <= m)`` and all middle values
    ``lam_{m+1}..lam_{n-m}`` must be nonnegative."""
    lam = sorted((float(x) for x in values), reverse=True)
    n = g.vertex_count
    if len(lam) != n:
        raise DimensionMismatch(f"need {n} values for {n} vertices, got {len(lam)}")
    m = matching_number(g)
    eps = tol * scale_of(lam)
    for i in range(1, m + 1):
        pair = lam[i - 1] + lam[n - i]
        if pair < -eps:
            return Decision(
                DecisionVerdict.NOT_REALIZABLE,
                "pair_sum",
                Witness((i, n - i + 1), 0.0, pair),
            )
    for i in range(m + 1, n - m + 1):
        if lam[i - 1] < -eps:
            return Decision(
                DecisionVerdict.NOT_REALIZABLE,
                "middle_value",
                Witness((i,), 0.0, lam[i - 1]),
            )
    return Decision(
        DecisionVerdict.REALIZABLE, "bipartite_pairing", flags={"matching_number": m}
    )
