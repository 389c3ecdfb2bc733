"""Efficiency digraph of a reciprocal matrix and a positive vector.

G has vertices 1..n and an edge (i, j) whenever w_i / w_j >= a_ij, up to a
relative tolerance so that exact ratio ties (which float arithmetic
perturbs) keep both directions.  A vector is efficient (not Pareto-dominated
in entrywise deviation) iff G is strongly connected; for these digraphs that
is also equivalent to the existence of a directed Hamiltonian cycle.

When G is not strongly connected, `dominating_vector` builds an explicit
better vector: scale a source component of the condensation down by the
tightest crossing ratio.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import PerronPair, ReciprocalMatrix, pareto_dominates, perron

DEFAULT_EPS_REL = 1e-9
HAMILTONIAN_MAX_N = 10


@dataclass(frozen=True, eq=False)
class EfficiencyDigraph:
    """Vertex set {1..n} with the ratio-vs-entry edge set."""

    n: int
    edges: frozenset[tuple[int, int]]
    eps_rel: float

    def out_neighbors(self, i: int) -> list[int]:
        return sorted(j for (u, j) in self.edges if u == i)

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges


@dataclass(frozen=True, eq=False)
class EfficiencyReport:
    efficient: bool
    scc_count: int
    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    hamiltonian: tuple[int, ...] | None
    certificate: np.ndarray | None
    digraph: EfficiencyDigraph
    w: np.ndarray
    perron: PerronPair | None


def build_digraph(
    A: ReciprocalMatrix, w, eps_rel: float = DEFAULT_EPS_REL
) -> EfficiencyDigraph:
    """Edge (i,j) iff w_i / w_j >= a_ij * (1 - eps_rel), i != j."""
    w = np.asarray(w, dtype=float)
    if w.shape != (A.n,):
        raise ValueError("vector length mismatch")
    if eps_rel < 0:
        raise ValueError("eps_rel must be nonnegative")
    ratio = w[:, None] / w[None, :]
    keep = ratio >= A.a * (1.0 - eps_rel)
    np.fill_diagonal(keep, False)
    edges = frozenset((int(i) + 1, int(j) + 1) for i, j in np.argwhere(keep))
    return EfficiencyDigraph(n=A.n, edges=edges, eps_rel=float(eps_rel))


def _adjacency(G: EfficiencyDigraph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(1, G.n + 1)}
    for i, j in sorted(G.edges):
        adj[i].append(j)
    return adj


def strongly_connected(G: EfficiencyDigraph) -> tuple[bool, int, list[int]]:
    """SCC decomposition: (single component?, count, per-vertex labels).

    Labels follow the condensation topological order: every edge goes from
    a component with a smaller-or-equal label to one with a larger-or-equal
    label; ties broken by lowest contained vertex.
    """
    n = G.n
    adj = _adjacency(G)
    radj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, j in sorted(G.edges):
        radj[j].append(i)

    # Kosaraju: order by finish time on G, then peel components on reversed G.
    visited = [False] * (n + 1)
    order: list[int] = []
    for s in range(1, n + 1):
        if visited[s]:
            continue
        stack: list[tuple[int, int]] = [(s, 0)]
        visited[s] = True
        while stack:
            v, idx = stack.pop()
            if idx < len(adj[v]):
                stack.append((v, idx + 1))
                u = adj[v][idx]
                if not visited[u]:
                    visited[u] = True
                    stack.append((u, 0))
            else:
                order.append(v)

    comp_of = [0] * (n + 1)
    comps: list[list[int]] = []
    seen = [False] * (n + 1)
    for s in reversed(order):
        if seen[s]:
            continue
        members = []
        stack2 = [s]
        seen[s] = True
        while stack2:
            v = stack2.pop()
            members.append(v)
            for u in radj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack2.append(u)
        comps.append(sorted(members))

    # Topological order of the condensation, smallest contained vertex first.
    k = len(comps)
    for ci, members in enumerate(comps):
        for v in members:
            comp_of[v] = ci
    succ: list[set[int]] = [set() for _ in range(k)]
    indeg = [0] * k
    for i, j in G.edges:
        ci, cj = comp_of[i], comp_of[j]
        if ci != cj and cj not in succ[ci]:
            succ[ci].add(cj)
            indeg[cj] += 1
    ready = sorted((comps[c][0], c) for c in range(k) if indeg[c] == 0)
    topo: list[int] = []
    while ready:
        _, c = ready.pop(0)
        topo.append(c)
        for nxt in succ[c]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                ready.append((comps[nxt][0], nxt))
                ready.sort()
    label_of_comp = {c: pos for pos, c in enumerate(topo)}
    labels = [label_of_comp[comp_of[v]] for v in range(1, n + 1)]
    return k == 1, k, labels


def components_in_topo_order(G: EfficiencyDigraph) -> list[list[int]]:
    """Vertex lists of the SCCs, sources of the condensation first."""
    _, k, labels = strongly_connected(G)
    comps: list[list[int]] = [[] for _ in range(k)]
    for v, lab in enumerate(labels, start=1):
        comps[lab].append(v)
    return comps


def sources(G: EfficiencyDigraph) -> tuple[int, ...]:
    """Vertices with no incoming edge."""
    has_in = {j for (_, j) in G.edges}
    return tuple(v for v in range(1, G.n + 1) if v not in has_in)


def sinks(G: EfficiencyDigraph) -> tuple[int, ...]:
    """Vertices with no outgoing edge."""
    has_out = {i for (i, _) in G.edges}
    return tuple(v for v in range(1, G.n + 1) if v not in has_out)


def no_source_theorem_check(
    A: ReciprocalMatrix, eps_rel: float = DEFAULT_EPS_REL
) -> bool:
    """Structural no-source property of Perron digraphs.

    Checks that G has no source, and the sharper witness form: whenever a
    vertex i misses some incoming edge, there is a j with (j,i) present and
    (i,j) absent.
    """
    if A.n < 3:
        raise ValueError("requires order >= 3")
    w = perron(A).w
    G = build_digraph(A, w, eps_rel)
    if sources(G):
        return False
    for i in range(1, A.n + 1):
        missing_in = any(
            (k, i) not in G.edges for k in range(1, A.n + 1) if k != i
        )
        if not missing_in:
            continue
        witness = any(
            (j, i) in G.edges and (i, j) not in G.edges
            for j in range(1, A.n + 1)
            if j != i
        )
        if not witness:
            return False
    return True


def hamiltonian_cycle(G: EfficiencyDigraph) -> list[int] | None:
    """Directed Hamiltonian cycle by backtracking, or None.

    Branches lowest index first from vertex 1, so the returned cycle is
    deterministic.  Guarded to small n; strong connectivity is the
    equivalent scalable test for these digraphs.
    """
    n = G.n
    if n > HAMILTONIAN_MAX_N:
        raise ValueError(f"brute-force search limited to n <= {HAMILTONIAN_MAX_N}")
    adj = _adjacency(G)
    if n == 1:
        return None
    path = [1]
    used = [False] * (n + 1)
    used[1] = True

    def extend() -> bool:
        if len(path) == n:
            return (path[-1], 1) in G.edges
        for j in adj[path[-1]]:
            if not used[j]:
                used[j] = True
                path.append(j)
                if extend():
                    return True
                path.pop()
                used[j] = False
        return False

    return path.copy() if extend() else None


def dominating_vector(
    A: ReciprocalMatrix, w, eps_rel: float = DEFAULT_EPS_REL
) -> np.ndarray | None:
    """A vector Pareto-dominating w, or None when w is efficient.

    Take S = the first source component of the condensation.  Every absent
    crossing edge (j, i) into S means w_i / w_j exceeds a_ij strictly, so
    scaling S down by beta = max a_ij w_j / w_i (< 1) shrinks all crossing
    deviations, zeroes at least one, and leaves the rest unchanged.
    """
    w = np.asarray(w, dtype=float)
    G = build_digraph(A, w, eps_rel)
    comps = components_in_topo_order(G)
    if len(comps) == 1:
        return None
    S = set(comps[0])
    rest = [v for v in range(1, A.n + 1) if v not in S]
    beta = max(A[i, j] * w[j - 1] / w[i - 1] for i in S for j in rest)
    if not beta < 1.0:
        raise AssertionError("source component scaling must be < 1")
    w2 = w.copy()
    for i in S:
        w2[i - 1] = beta * w[i - 1]
    return w2


def analyze(
    A: ReciprocalMatrix,
    w=None,
    eps_rel: float = DEFAULT_EPS_REL,
) -> EfficiencyReport:
    """Full efficiency report for (A, w); w defaults to the Perron vector."""
    pp: PerronPair | None = None
    if w is None:
        pp = perron(A)
        w = pp.w
    w = np.asarray(w, dtype=float)
    G = build_digraph(A, w, eps_rel)
    efficient, scc_count, _ = strongly_connected(G)
    ham = hamiltonian_cycle(G) if A.n <= HAMILTONIAN_MAX_N else None
    cert = dominating_vector(A, w, eps_rel)
    if efficient != (cert is None):
        raise AssertionError("certificate existence must match inefficiency")
    if cert is not None and not pareto_dominates(A, w, cert):
        raise AssertionError("certificate failed the dominance definition")
    return EfficiencyReport(
        efficient=efficient,
        scc_count=scc_count,
        sources=sources(G),
        sinks=sinks(G),
        hamiltonian=tuple(ham) if ham else None,
        certificate=cert,
        digraph=G,
        w=w,
        perron=pp,
    )
