"""Minimum s-t cuts and Gomory-Hu trees of symmetric submodular functions."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import as_number, components, from_mask, iter_bits, lowest, popcount
from .errors import InvalidArgumentError, PropertyViolationError, ResourceLimitError
from .submodular import GraphCut, SetFunction, WeightedGraph

ENUM_LIMIT = 20
SYMMETRY_CHECK_N = 12


def _max_flow_source_side(m: int, arcs: dict, s: int, t: int) -> int:
    """Edmonds-Karp on an undirected capacity map; returns the set of nodes
    reachable from ``s`` in the final residual graph (the inclusion-minimal
    minimum cut side)."""
    res = {u: dict(nb) for u, nb in arcs.items()}
    for u in range(m):
        res.setdefault(u, {})
    while True:
        prev = {s: None}
        q = deque([s])
        while q and t not in prev:
            u = q.popleft()
            for v in sorted(res[u]):
                if v not in prev and res[u][v] > 0:
                    prev[v] = u
                    q.append(v)
        if t not in prev:
            return sum(1 << u for u in prev)
        bottleneck = None
        v = t
        while prev[v] is not None:
            c = res[prev[v]][v]
            bottleneck = c if bottleneck is None or c < bottleneck else bottleneck
            v = prev[v]
        v = t
        while prev[v] is not None:
            u = prev[v]
            res[u][v] -= bottleneck
            res[v][u] = res[v].get(u, 0) + bottleneck
            v = u


def contracted_min_cut(f: SetFunction, nodes, s: int, t: int) -> int:
    """Minimise ``f`` over unions of ``nodes`` (disjoint masks) containing node
    ``s`` and not node ``t``.  Returns the union mask of the minimiser; ties go
    to the first minimiser in ascending enumeration order of the free nodes."""
    if isinstance(f, GraphCut):
        owner = {}
        for i, m in enumerate(nodes):
            for e in iter_bits(m):
                owner[e] = i
        arcs: dict = {}
        for u, v, w in f.graph.edges:
            a, b = owner.get(u), owner.get(v)
            if a is None or b is None or a == b or w == 0:
                continue
            arcs.setdefault(a, {})
            arcs.setdefault(b, {})
            arcs[a][b] = arcs[a].get(b, 0) + w
            arcs[b][a] = arcs[b].get(a, 0) + w
        side = _max_flow_source_side(len(nodes), arcs, s, t)
        return sum(nodes[i] for i in iter_bits(side))
    if len(nodes) > ENUM_LIMIT:
        raise ResourceLimitError(f"exhaustive s-t cut over {len(nodes)} nodes")
    table = f.table()
    nm = np.asarray(nodes, dtype=np.int64)
    return int(_kernels.min_split_enum(table.values, nm, s, t, 0, 0, table.eps))


def min_st_cut(f: SetFunction, s: int, t: int):
    """Minimum of f(S) over s in S, t not in S.  Returns (S, value)."""
    if s == t:
        raise InvalidArgumentError("s and t must differ")
    if not (0 <= s < f.n and 0 <= t < f.n):
        raise InvalidArgumentError("terminal out of range")
    mask = contracted_min_cut(f, [1 << e for e in range(f.n)], s, t)
    return from_mask(mask), f.value(mask)


@dataclass(frozen=True)
class GomoryHuTree:
    n: int
    edges: tuple  # (u, v, w) with u < v
    fingerprint: str = ""
    trusted: bool = False

    def as_graph(self) -> WeightedGraph:
        return WeightedGraph(self.n, self.edges)

    def path(self, s: int, t: int) -> list:
        """Edge indices along the tree path from s to t."""
        adj = {v: [] for v in range(self.n)}
        for i, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        prev = {s: None}
        q = deque([s])
        while q:
            u = q.popleft()
            for v, i in adj[u]:
                if v not in prev:
                    prev[v] = (u, i)
                    q.append(v)
        out = []
        v = t
        while prev[v] is not None:
            u, i = prev[v]
            out.append(i)
            v = u
        return out[::-1]

    def min_cut(self, s: int, t: int):
        """(value, side containing s) read off the tree."""
        path = self.path(s, t)
        best = min(path, key=lambda i: (self.edges[i][2], path.index(i)))
        comps = components(self.n, self.edges, [best])
        side = next(c for c in comps if c >> s & 1)
        return self.edges[best][2], from_mask(side)


def gomory_hu_tree(f: SetFunction) -> GomoryHuTree:
    """Contraction-based Gomory-Hu construction for a symmetric oracle."""
    n = f.n
    if n < 2:
        raise InvalidArgumentError("Gomory-Hu tree needs n >= 2")
    if not f.symmetric:
        raise PropertyViolationError(f"{f.kind} oracle is not declared symmetric")
    trusted = n > SYMMETRY_CHECK_N
    if not trusted:
        t = f.table()
        if _kernels.symmetric_check(t.values, t.eps) >= 0:
            raise PropertyViolationError("oracle declared symmetric but f(A) != f(V - A)")

    supers = [(1 << n) - 1]
    tedges: list = []  # [a, b, w] over supernode indices
    while True:
        big = [i for i, m in enumerate(supers) if popcount(m) >= 2]
        if not big:
            break
        xi = min(big, key=lambda i: lowest(supers[i]))
        X = supers[xi]
        s = lowest(X)
        t = lowest(X & ~(1 << s))

        incident = [e for e in tedges if xi in (e[0], e[1])]
        comp_of = {}
        for e in incident:
            y = e[1] if e[0] == xi else e[0]
            comp_of[y] = _subtree_union(supers, tedges, y, xi)

        elems = list(iter_bits(X))
        nodes = [1 << e for e in elems] + [comp_of[y] for y in sorted(comp_of)]
        S = contracted_min_cut(f, nodes, elems.index(s), elems.index(t))
        value = f.value(S)

        yi = len(supers)
        supers[xi] = X & S
        supers.append(X & ~S)
        for e in incident:
            y = e[1] if e[0] == xi else e[0]
            if not comp_of[y] & S:
                if e[0] == xi:
                    e[0] = yi
                else:
                    e[1] = yi
        tedges.append([xi, yi, value])

    elem = [lowest(m) for m in supers]
    edges = tuple(sorted((min(elem[a], elem[b]), max(elem[a], elem[b]), as_number(w))
                         for a, b, w in tedges))
    return GomoryHuTree(n, edges, f.fingerprint() if n <= 24 else "", trusted)


def _subtree_union(supers, tedges, start, blocked) -> int:
    adj: dict = {}
    for a, b, _ in tedges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {start, blocked}
    out = supers[start]
    q = deque([start])
    while q:
        u = q.popleft()
        for v in adj.get(u, ()):
            if v not in seen:
                seen.add(v)
                out |= supers[v]
                q.append(v)
    return out
