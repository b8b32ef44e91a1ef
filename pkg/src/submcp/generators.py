"""Seeded instance generators.

Families
--------
random      random objective + random rank-k matroid
coverage    graph-coverage objective + random rank-k matroid
tree        graph-cut objective on a random spanning tree (``matroids=2`` for the
            two-matroid variant)
tightness   k pairs {i, i+k}, objective = rank of the laminar matroid
            {|X & pair| <= 1, |X| <= k-1}, constraint U(k, 2k)
common-mc   depth-two tree encoding three partition matroids; zero optimum iff
            the three share a common basis
"""
from __future__ import annotations

import random
from itertools import combinations

from .core import GroundSet, popcount
from .errors import InvalidArgumentError
from .instance import Instance
from .matroid import (GraphicMatroid, LaminarMatroid, Matroid, PartitionMatroid, PavingMatroid,
                      UniformMatroid)
from .submodular import (GraphCoverage, GraphCut, HypergraphCut, MatroidRank, SumFunction,
                         WeightedGraph, WeightedHypergraph)

FUNCTION_KINDS = ("graph-cut", "hypergraph-cut", "graph-coverage", "matroid-rank", "general")
MATROID_KINDS = ("uniform", "partition", "graphic", "paving", "laminar")
FAMILIES = ("random", "coverage", "tree", "tightness", "common-mc")


# -- matroids --------------------------------------------------------------

def random_matroid(rng: random.Random, n: int, k: int, kind: str) -> Matroid:
    if not 0 <= k <= n:
        raise InvalidArgumentError(f"rank {k} impossible on {n} elements")
    if kind == "uniform":
        return UniformMatroid(n, k)
    if kind == "partition":
        return _random_partition_matroid(rng, n, k)
    if kind == "graphic":
        return _random_graphic(rng, n, k)
    if kind == "paving":
        return _random_paving(rng, n, k)
    if kind == "laminar":
        return _random_laminar(rng, n, k)
    raise InvalidArgumentError(f"unknown matroid kind {kind!r}")


def _random_labels(rng, n, c):
    """Surjective assignment of n elements to c classes."""
    labels = list(range(c)) + [rng.randrange(c) for _ in range(n - c)]
    rng.shuffle(labels)
    return labels


def _random_partition_matroid(rng, n, k):
    c = rng.randint(max(1, min(k, 1)), n)
    labels = _random_labels(rng, n, c)
    classes = [[e for e in range(n) if labels[e] == i] for i in range(c)]
    caps = [0] * c
    for _ in range(k):
        open_ = [i for i in range(c) if caps[i] < len(classes[i])]
        caps[rng.choice(open_)] += 1
    return PartitionMatroid(n, classes, caps)


def _random_graphic(rng, n, k):
    edges = [(v, rng.randrange(v)) for v in range(1, k + 1)]
    while len(edges) < n:
        if k == 0:
            raise InvalidArgumentError("rank-0 graphic matroid needs self-loops")
        u, v = rng.sample(range(k + 1), 2)
        edges.append((u, v))
    rng.shuffle(edges)
    return GraphicMatroid(k + 1, edges)


def _random_paving(rng, n, k):
    hs = []
    if 0 < k < n:
        for _ in range(rng.randint(0, 3)):
            size = rng.randint(k, n - 1)
            h = frozenset(rng.sample(range(n), size))
            if all(len(h & g) <= k - 2 for g in hs):
                hs.append(h)
    M = PavingMatroid(n, k, [sorted(h) for h in hs])
    assert M.full_rank == k
    return M


def _random_laminar(rng, n, k):
    for _ in range(100):
        family, bounds = [], []

        def split(elems, depth):
            if len(elems) < 2 or depth > 2:
                return
            c = rng.randint(2, min(3, len(elems)))
            labels = _random_labels(rng, len(elems), c)
            for i in range(c):
                part = [elems[j] for j in range(len(elems)) if labels[j] == i]
                if len(part) < len(elems) and rng.random() < 0.7:
                    family.append(sorted(part))
                    bounds.append(rng.randint(1, len(part)))
                split(part, depth + 1)

        split(list(range(n)), 0)
        M = LaminarMatroid(n, family, bounds, cap=k)
        if M.full_rank == k:
            return M
    return LaminarMatroid(n, [], [], cap=k)


# -- functions -------------------------------------------------------------

def random_graph(rng, n, p=0.5, wmax=5, tree=False) -> WeightedGraph:
    if tree:
        edges = [(rng.randrange(v), v, rng.randint(1, wmax)) for v in range(1, n)]
        perm = list(range(n))
        rng.shuffle(perm)
        edges = [(min(perm[u], perm[v]), max(perm[u], perm[v]), w) for u, v, w in edges]
        return WeightedGraph(n, sorted(edges))
    edges = [(u, v, rng.randint(1, wmax)) for u, v in combinations(range(n), 2) if rng.random() < p]
    if not edges and n >= 2:
        u, v = sorted(rng.sample(range(n), 2))
        edges.append((u, v, rng.randint(1, wmax)))
    return WeightedGraph(n, edges)


def random_function(rng, n, kind, wmax=5):
    if kind == "graph-cut":
        return GraphCut(random_graph(rng, n, wmax=wmax))
    if kind == "graph-coverage":
        return GraphCoverage(random_graph(rng, n, wmax=wmax))
    if kind == "hypergraph-cut":
        hes = []
        for _ in range(rng.randint(max(1, n // 2), 2 * n)):
            size = rng.randint(2, min(4, n)) if n >= 2 else 1
            hes.append((rng.sample(range(n), size), rng.randint(1, wmax)))
        return HypergraphCut(WeightedHypergraph(n, hes))
    if kind == "matroid-rank":
        r = rng.randint(1, n)
        return MatroidRank(random_matroid(rng, n, r, rng.choice(("uniform", "partition", "laminar"))))
    if kind == "general":
        parts = [GraphCut(random_graph(rng, n, wmax=wmax)),
                 GraphCoverage(random_graph(rng, n, wmax=wmax)),
                 MatroidRank(random_matroid(rng, n, rng.randint(1, n), "partition"))]
        coefs = [rng.randint(1, 3), rng.randint(0, 3), rng.randint(0, 3)]
        if coefs[1] == coefs[2] == 0:
            coefs[rng.choice((1, 2))] = 1
        return SumFunction(list(zip(coefs, parts)))
    raise InvalidArgumentError(f"unknown function kind {kind!r}")


# -- families --------------------------------------------------------------

def random_instance(seed, n=6, k=2, function="graph-cut", matroid="uniform", wmax=5) -> Instance:
    rng = random.Random(seed)
    f = random_function(rng, n, function, wmax)
    M = random_matroid(rng, n, k, matroid)
    meta = {"generator": "random", "seed": seed,
            "params": {"n": n, "k": k, "function": function, "matroid": matroid, "wmax": wmax}}
    return Instance(GroundSet(n), f, (M,), k, "single", meta)


def coverage_instance(seed, n=6, k=2, matroid="uniform", wmax=5) -> Instance:
    inst = random_instance(seed, n, k, "graph-coverage", matroid, wmax)
    inst.metadata["generator"] = "coverage"
    del inst.metadata["params"]["function"]
    return inst


def tree_instance(seed, n=6, k=2, matroid="uniform", matroids=1, wmax=5) -> Instance:
    rng = random.Random(seed)
    g = random_graph(rng, n, wmax=wmax, tree=True)
    kinds = [matroid] if matroids == 1 else [matroid, rng.choice(MATROID_KINDS)]
    if matroid == "mixed":
        kinds = [rng.choice(MATROID_KINDS) for _ in range(matroids)]
    ms = tuple(random_matroid(rng, n, k, kd) for kd in kinds)
    meta = {"generator": "tree", "seed": seed,
            "params": {"n": n, "k": k, "matroid": matroid, "matroids": matroids, "wmax": wmax}}
    return Instance(GroundSet(n), GraphCut(g), ms, k, "single" if matroids == 1 else "double", meta)


def tightness_instance(k: int) -> Instance:
    if k < 1:
        raise InvalidArgumentError("tightness needs k >= 1")
    n = 2 * k
    # pair i is {i, i+k}: peeling off the largest-index singleton then takes
    # one element from each of k-1 distinct pairs
    pairs = [[i, i + k] for i in range(k)]
    f = MatroidRank(LaminarMatroid(n, pairs, [1] * k, cap=k - 1))
    meta = {"generator": "tightness", "params": {"k": k}}
    return Instance(GroundSet(n), f, (UniformMatroid(n, k),), k, "single", meta)


def common_mc_instance(classes1, classes2, classes3, meta=None) -> Instance:
    """Tree of depth two: root z, one vertex per class of the third partition
    matroid, leaves for the elements.  The first two partition matroids are
    extended with the class vertices as loops and z as a free element."""
    elems = sorted(set().union(*map(set, classes3)))
    m = len(elems)
    for cls in (classes1, classes2, classes3):
        if sorted(e for c in cls for e in c) != list(range(m)):
            raise InvalidArgumentError("each partition must cover 0..m-1 exactly once")
    r = len(classes3)
    if not (len(classes1) == len(classes2) == r):
        raise InvalidArgumentError("all three partitions need the same number of classes")
    z = m + r
    n = z + 1
    edges = [(m + i, z, 0) for i in range(r)]
    for i, cls in enumerate(classes3):
        edges += [(s, m + i, 1) for s in cls]
    g = WeightedGraph(n, sorted(edges))
    loops_free = [[m + i] for i in range(r)] + [[z]]
    caps_extra = [0] * r + [1]
    M1 = PartitionMatroid(n, [list(c) for c in classes1] + loops_free, [1] * r + caps_extra)
    M2 = PartitionMatroid(n, [list(c) for c in classes2] + loops_free, [1] * r + caps_extra)
    labels = [f"s{e}" for e in range(m)] + [f"v{i}" for i in range(r)] + ["z"]
    meta = dict(meta or {})
    meta.setdefault("generator", "common-mc")
    meta["classes"] = [[list(c) for c in cls] for cls in (classes1, classes2, classes3)]
    return Instance(GroundSet(n, tuple(labels)), GraphCut(g), (M1, M2), r + 1, "common", meta)


def random_common_mc(seed, m=5, r=2) -> Instance:
    rng = random.Random(seed)
    if not 1 <= r <= m:
        raise InvalidArgumentError("need 1 <= r <= m")
    triple = []
    for _ in range(3):
        labels = _random_labels(rng, m, r)
        triple.append([[e for e in range(m) if labels[e] == i] for i in range(r)])
    return common_mc_instance(*triple, meta={"seed": seed, "params": {"m": m, "r": r}})


def has_common_basis(classes1, classes2, classes3) -> bool:
    """Brute force: an r-set meeting every class of all three partitions once."""
    r = len(classes3)
    m = sum(len(c) for c in classes3)
    masks = [[sum(1 << e for e in c) for c in cls] for cls in (classes1, classes2, classes3)]
    for combo in combinations(range(m), r):
        b = sum(1 << e for e in combo)
        if all(popcount(b & c) == 1 for cls in masks for c in cls):
            return True
    return False


def generate(family: str, params: dict | None = None, seed: int = 0) -> Instance:
    params = dict(params or {})
    if family == "random":
        return random_instance(seed, **params)
    if family == "coverage":
        return coverage_instance(seed, **params)
    if family == "tree":
        return tree_instance(seed, **params)
    if family == "tightness":
        return tightness_instance(**params)
    if family == "common-mc":
        if "classes" in params:
            return common_mc_instance(*params["classes"])
        return random_common_mc(seed, **params)
    raise InvalidArgumentError(f"unknown generator family {family!r}")
