"""Partitioning algorithms for matroid-constrained submodular partitioning.

Every solver returns a :class:`~submcp.core.Partition` whose ``witness`` is a
basis of the constraint matroid with exactly one element per block.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from . import _kernels
from .core import (EPS, Partition, as_number, from_mask, full_mask, is_exact, is_spanning_tree,
                   iter_bits, lowest, popcount, to_mask)
from .errors import (InfeasibleError, InternalInvariantError, InvalidArgumentError,
                     PropertyViolationError, ResourceLimitError)
from .gomory_hu import ENUM_LIMIT, _max_flow_source_side, gomory_hu_tree
from .matroid import (Dual, Matroid, PartitionMatroid, TreeEdgeMatroid, Truncation,
                      independent_sets, independent_transversal, intersect_mask,
                      min_weight_basis, weighted_intersection_levels)
from .submodular import GraphCut, SetFunction, WeightedGraph, partition_value

BRUTE_FORCE_N = 12
TIE_BREAK_MODES = ("lexicographic", "adversarial-max-cardinality", "seeded-random")


@dataclass(frozen=True)
class TieBreakPolicy:
    mode: str = "lexicographic"
    seed: int = 0

    def __post_init__(self):
        if self.mode not in TIE_BREAK_MODES:
            raise InvalidArgumentError(f"unknown tie-break mode {self.mode!r}")

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "TieBreakPolicy":
        """Accepts ``lexicographic``, ``adversarial`` or ``seeded-random[:SEED]``."""
        mode, _, arg = text.partition(":")
        if mode == "adversarial":
            mode = "adversarial-max-cardinality"
        return cls(mode, int(arg) if arg else seed)


@dataclass
class AlgorithmTrace:
    algorithm: str
    steps: list = field(default_factory=list)
    final_value: object = None

    def to_dict(self) -> dict:
        return {"algorithm": self.algorithm, "steps": self.steps,
                "final_value": _jsonable(self.final_value)}


def _jsonable(x):
    if isinstance(x, (int, float)) or x is None:
        return x
    return str(x)


def _rank_k(f: SetFunction, M: Matroid) -> int:
    if f.n != M.n:
        raise InvalidArgumentError(f"function has n={f.n}, matroid has n={M.n}")
    k = M.full_rank
    if k < 1:
        raise InfeasibleError("constraint matroid has rank 0")
    return k


def _near(a, b) -> bool:
    return a == b if is_exact(a) and is_exact(b) else abs(a - b) <= EPS


# -- Gomory-Hu greedy ------------------------------------------------------

def gh_greedy(f: SetFunction, M: Matroid):
    """Cut the k-1 cheapest Gomory-Hu tree edges that keep a feasible transversal."""
    if not f.symmetric:
        raise PropertyViolationError(f"gh_greedy needs a symmetric oracle, got {f.kind}")
    k = _rank_k(f, M)
    trace = AlgorithmTrace("gh_greedy")
    if f.n == 1:
        P = Partition((frozenset({0}),), witness=frozenset({0}))
        trace.final_value = f.value(1)
        return P, trace
    tree = gomory_hu_tree(f)
    P, chosen = _greedy_tree_cut(tree.as_graph(), M, k, trace)
    trace.final_value = partition_value(f, P)
    return P, trace


def _greedy_tree_cut(tree: WeightedGraph, M: Matroid, k: int, trace=None):
    TE = TreeEdgeMatroid(tree, M)
    order = sorted(range(len(tree.edges)), key=lambda i: (tree.edges[i][2], i))
    C = 0
    for rank_pos, e in enumerate(order):
        if popcount(C) == k - 1:
            break
        if TE.indep(C | (1 << e)):
            C |= 1 << e
            if trace is not None:
                u, v, w = tree.edges[e]
                trace.steps.append({"edge": [u, v], "weight": _jsonable(w),
                                    "candidates": len(order) - rank_pos})
    if popcount(C) != k - 1:
        raise InternalInvariantError(f"only {popcount(C)} of {k - 1} tree edges extendable")
    comps = TE.components(C)
    witness = TE.transversal(C)
    return Partition.from_masks(comps, witness=from_mask(witness)), C


# -- exact tree solvers ----------------------------------------------------

def _as_tree(T, n):
    if not isinstance(T, WeightedGraph):
        T = T.as_graph()
    if T.n != n:
        raise InvalidArgumentError("tree and matroid have different ground sets")
    if not is_spanning_tree(T.n, T.edges):
        raise InvalidArgumentError("input graph is not a spanning tree")
    return T


def tree_multiway_cut(T: WeightedGraph, M: Matroid):
    """Exact optimum on a tree: a minimum-weight basis of the tree-edge matroid."""
    T = _as_tree(T, M.n)
    if M.full_rank < 1:
        raise InfeasibleError("constraint matroid has rank 0")
    TE = TreeEdgeMatroid(T, M)
    basis, weight = min_weight_basis(TE, [w for _, _, w in T.edges])
    C = to_mask(basis, TE.n)
    P = Partition.from_masks(TE.components(C), witness=from_mask(TE.transversal(C)))
    return P, as_number(2 * weight)


def double_tree_multiway_cut(T: WeightedGraph, M1: Matroid, M2: Matroid):
    """Exact optimum on a tree when two matroids each need their own transversal basis."""
    T = _as_tree(T, M1.n)
    if M2.n != M1.n:
        raise InvalidArgumentError("matroids have different ground sets")
    k = M1.full_rank
    if M2.full_rank != k:
        raise InvalidArgumentError(f"matroid ranks differ ({k} vs {M2.full_rank})")
    if k < 1:
        raise InfeasibleError("constraint matroids have rank 0")
    TE1, TE2 = TreeEdgeMatroid(T, M1), TreeEdgeMatroid(T, M2)
    weights = [w for _, _, w in T.edges]
    # min-weight common spanning set = complement of a max-weight common independent set of the duals
    levels = weighted_intersection_levels(Dual(TE1), Dual(TE2), weights)
    wsum = [sum(weights[e] for e in iter_bits(I)) for I in levels]
    best = max(range(len(levels)), key=lambda i: (wsum[i], i))
    C = TE1.ground & ~levels[best]
    if TE1.rank_mask(C) != k - 1 or TE2.rank_mask(C) != k - 1:
        raise InternalInvariantError("complement of dual intersection is not spanning")

    comps = TE1.components(C)
    pm = PartitionMatroid(M1.n, [list(iter_bits(c)) for c in comps])
    B1, B2 = intersect_mask(pm, M1), intersect_mask(pm, M2)
    if popcount(B1) != k or popcount(B2) != k:
        raise InternalInvariantError("spanning set components lack transversal bases")

    while len(comps) > k:
        for i, j in combinations(range(len(comps)), 2):
            u = comps[i] | comps[j]
            if popcount(u & B1) <= 1 and popcount(u & B2) <= 1:
                comps = sorted([c for t, c in enumerate(comps) if t not in (i, j)] + [u], key=lowest)
                break
        else:
            raise InternalInvariantError(f"no mergeable pair among {len(comps)} classes")

    P = Partition.from_masks(comps, witness=from_mask(B1), witness2=from_mask(B2))
    return P, as_number(2 * T.crossing_weight(P))


# -- greedy splitting ------------------------------------------------------

def _min_split(f: SetFunction, W: int, x: int, y: int):
    if isinstance(f, GraphCut):
        elems = list(iter_bits(W))
        idx = {e: i for i, e in enumerate(elems)}
        arcs: dict = {}
        for u, v, w in f.graph.edges:
            if u in idx and v in idx and w:
                a, b = idx[u], idx[v]
                arcs.setdefault(a, {})
                arcs.setdefault(b, {})
                arcs[a][b] = arcs[a].get(b, 0) + w
                arcs[b][a] = arcs[b].get(a, 0) + w
        side = _max_flow_source_side(len(elems), arcs, idx[x], idx[y])
        X = sum(1 << elems[i] for i in iter_bits(side))
    else:
        if popcount(W) > ENUM_LIMIT + 2:
            raise ResourceLimitError(f"exhaustive split of a block with {popcount(W)} elements")
        table = f.table()
        elems = list(iter_bits(W))
        nodes = np.asarray([1 << e for e in elems], dtype=np.int64)
        X = int(_kernels.min_split_enum(table.values, nodes, elems.index(x), elems.index(y),
                                        W, 1, table.eps))
    cost = as_number(f.value(X) + f.value(W & ~X) - f.value(W))
    return X, cost


def min_split_pair(f: SetFunction, W, x: int, y: int):
    """Cheapest split (X, W - X) of block W with x in X and y outside.

    Returns ``(X, f(X) + f(W - X) - f(W))``.
    """
    if x == y:
        raise InvalidArgumentError("x and y must differ")
    Wm = to_mask(W, f.n)
    if not (Wm >> x & 1 and Wm >> y & 1):
        raise InvalidArgumentError("x and y must both lie in W")
    X, cost = _min_split(f, Wm, x, y)
    return from_mask(X), cost


def greedy_split(f: SetFunction, M: Matroid, policy: Optional[TieBreakPolicy] = None):
    """Refine {V} k-1 times, each time by the cheapest split that keeps an
    independent transversal of the refined partition."""
    policy = policy or TieBreakPolicy()
    k = _rank_k(f, M)
    rng = random.Random(policy.seed)
    trace = AlgorithmTrace("greedy_split")
    blocks = [full_mask(f.n)]
    for i in range(1, k):
        cands = []  # (cost, W, X)
        for W in blocks:
            if popcount(W) < 2:
                continue
            others = [b for b in blocks if b != W]
            for x, y in combinations(iter_bits(W), 2):
                if independent_transversal(M, others + [1 << x, 1 << y]) is None:
                    continue
                X, cost = _min_split(f, W, x, y)
                cands.append((cost, W, X))
        if not cands:
            raise InfeasibleError(f"no feasible split at step {i} (rank {k})")
        best = min(c[0] for c in cands)
        tied = [c for c in cands if _near(c[0], best)]
        cost, W, X = tied[0]
        if policy.mode == "adversarial-max-cardinality":
            pick = _adversarial_singleton(f, M, blocks, best)
            if pick is not None:
                cost, W, X = pick
        elif policy.mode == "seeded-random":
            uniq = sorted({(W_, min(X_, W_ & ~X_)) for _, W_, X_ in tied})
            W, X = uniq[rng.randrange(len(uniq))]
            cost = next(c for c, W_, X_ in tied if W_ == W and X in (X_, W_ & ~X_))
        blocks = sorted([b for b in blocks if b != W] + [X, W & ~X], key=lowest)
        trace.steps.append({"step": i, "block": list(iter_bits(W)), "split": list(iter_bits(X)),
                            "delta": _jsonable(cost), "candidates": len(cands)})
    witness = independent_transversal(M, blocks)
    if witness is None:
        raise InternalInvariantError("final partition has no transversal basis")
    P = Partition.from_masks(blocks, witness=from_mask(witness))
    trace.final_value = partition_value(f, P)
    return P, trace


def _adversarial_singleton(f, M, blocks, best):
    """Among cheapest splits, one that peels off the largest-index singleton."""
    for s in range(f.n - 1, -1, -1):
        W = next(b for b in blocks if b >> s & 1)
        if popcount(W) < 2:
            continue
        rest = W & ~(1 << s)
        cost = as_number(f.value(1 << s) + f.value(rest) - f.value(W))
        if not _near(cost, best):
            continue
        others = [b for b in blocks if b != W]
        if independent_transversal(M, others + [1 << s, rest]) is not None:
            return cost, W, 1 << s
    return None


# -- cheapest singleton ----------------------------------------------------

def cheapest_singleton(f: SetFunction, M: Matroid) -> Partition:
    """k-1 cheapest singletons forming an independent set, plus the remainder."""
    k = _rank_k(f, M)
    weights = [f.value(1 << v) for v in range(f.n)]
    I, _ = min_weight_basis(Truncation(M, k - 1), weights)
    Imask = to_mask(I, f.n)
    rest = full_mask(f.n) & ~Imask
    # augmentation guarantees some remainder element completes I to a basis
    ext = next((r for r in iter_bits(rest) if M.indep(Imask | (1 << r))), None)
    if ext is None:
        raise InternalInvariantError("independent set of size k-1 does not extend to a basis")
    blocks = [1 << v for v in iter_bits(Imask)] + [rest]
    return Partition.from_masks(blocks, witness=from_mask(Imask | (1 << ext)))


# -- brute force -----------------------------------------------------------

def brute_force_opt(f: SetFunction, M: Matroid, M2: Optional[Matroid] = None,
                    common: bool = False, parts: Optional[int] = None):
    """Exact optimum by enumerating every set partition into ``parts`` blocks.

    ``parts`` defaults to rank(M); a partition is feasible when it admits an
    independent transversal of that size.  With ``M2`` each matroid needs its
    own transversal, unless ``common`` demands a single shared one.
    """
    n = f.n
    if n > BRUTE_FORCE_N:
        raise ResourceLimitError(f"brute force limited to n <= {BRUTE_FORCE_N}, got {n}")
    if M.n != n or (M2 is not None and M2.n != n):
        raise InvalidArgumentError("function and matroid ground sets differ")
    k = M.full_rank if parts is None else parts
    if M2 is not None and parts is None and M2.full_rank != k:
        raise InvalidArgumentError(f"matroid ranks differ ({k} vs {M2.full_rank})")
    if not 1 <= k <= n:
        raise InfeasibleError(f"cannot split {n} elements into {k} nonempty blocks")
    c1 = independent_sets(M, k)
    c2 = independent_sets(M2, k) if M2 is not None else []
    if common:
        c1, c2 = sorted(set(c1) & set(c2)), []
    if not c1:
        raise InfeasibleError("no independent transversal candidates")
    table = f.table()
    labels = _kernels.partition_search(table.values, n, k, np.asarray(c1, dtype=np.int64),
                                       np.asarray(c2, dtype=np.int64), table.eps)
    if labels[0] < 0:
        raise InfeasibleError("no feasible partition")
    P = Partition.from_labels([int(x) for x in labels])
    masks = [to_mask(b, n) for b in P.blocks]

    def hit(cands):
        for c in cands:
            if all(popcount(c & b) == 1 for b in masks):
                return from_mask(c)
        return None

    w1 = hit(c1)
    w2 = w1 if common else (hit(c2) if M2 is not None else None)
    P = Partition(P.blocks, witness=w1, witness2=w2)
    return P, partition_value(f, P)
