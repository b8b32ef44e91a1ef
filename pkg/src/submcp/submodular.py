"""Submodular set functions given by value oracles.

Every oracle evaluates exactly (``int``/``Fraction``) when its data is
rational and in floating point otherwise.  For exhaustive work an oracle can
materialise a :class:`ValueTable` holding ``f`` on all ``2**n`` subsets.
"""
from __future__ import annotations

import hashlib
import math
import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .core import (EPS, Partition, as_number, from_mask, full_mask, is_exact,
                   to_mask)
from .errors import InvalidArgumentError, ResourceLimitError

MAX_TABLE_N = 24


@dataclass(frozen=True)
class ValueTable:
    """``f`` on every subset, indexed by bitmask.

    Exact tables store ``f * scale`` as int64; float tables have ``scale == 0``.
    """

    values: np.ndarray
    scale: int

    @property
    def exact(self) -> bool:
        return self.scale != 0

    @property
    def eps(self) -> float:
        return 0.0 if self.exact else EPS

    def __getitem__(self, mask: int):
        v = self.values[mask]
        if not self.exact:
            return float(v)
        return as_number(Fraction(int(v), self.scale))


def pack_values(values: Sequence) -> ValueTable:
    if all(isinstance(v, int) for v in values):
        return ValueTable(np.asarray(values, dtype=np.int64), 1)
    if all(is_exact(v) for v in values):
        scale = math.lcm(*(Fraction(v).denominator for v in values))
        return ValueTable(np.asarray([int(v * scale) for v in values], dtype=np.int64), scale)
    return ValueTable(np.asarray(values, dtype=np.float64), 0)


def _weight_array(ws):
    """Weights as a kernel-ready array plus the table scale."""
    if all(isinstance(w, int) for w in ws):
        return np.asarray(ws, dtype=np.int64), 1
    if all(is_exact(w) for w in ws):
        scale = math.lcm(*(Fraction(w).denominator for w in ws))
        return np.asarray([int(w * scale) for w in ws], dtype=np.int64), scale
    return np.asarray(ws, dtype=np.float64), 0


def _check_weight(w, where):
    w = as_number(w)
    if w < 0:
        raise InvalidArgumentError(f"negative weight {w} in {where}")
    return w


class WeightedGraph:
    """Undirected multigraph on ``range(n)``; parallel edges are summed."""

    def __init__(self, n: int, edges):
        if n < 1:
            raise InvalidArgumentError("graph needs at least one vertex")
        self.n = n
        clean = []
        for e in edges:
            u, v, w = (e[0], e[1], e[2] if len(e) > 2 else 1)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge ({u}, {v}) has endpoint out of range")
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            clean.append((int(u), int(v), _check_weight(w, "graph edge")))
        self.edges = tuple(clean)

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other):
        return isinstance(other, WeightedGraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    @property
    def total_weight(self):
        return as_number(sum(w for _, _, w in self.edges))

    def cut(self, mask: int):
        s = 0
        for u, v, w in self.edges:
            if ((mask >> u) ^ (mask >> v)) & 1:
                s += w
        return as_number(s)

    def crossing_weight(self, partition: Partition):
        """Total weight of edges whose endpoints lie in different blocks."""
        lab = partition.labels(self.n)
        return as_number(sum(w for u, v, w in self.edges if lab[u] != lab[v]))


class WeightedHypergraph:
    def __init__(self, n: int, hyperedges):
        if n < 1:
            raise InvalidArgumentError("hypergraph needs at least one vertex")
        self.n = n
        clean = []
        for members, w in hyperedges:
            members = tuple(sorted(set(int(x) for x in members)))
            if not members:
                raise InvalidArgumentError("empty hyperedge")
            if members[0] < 0 or members[-1] >= n:
                raise InvalidArgumentError(f"hyperedge {members} out of range")
            clean.append((members, _check_weight(w, "hyperedge")))
        self.hyperedges = tuple(clean)
        self.masks = tuple(to_mask(m, n) for m, _ in clean)

    def __repr__(self):
        return f"WeightedHypergraph(n={self.n}, m={len(self.hyperedges)})"


class SetFunction:
    """Base class for value oracles.

    Subclasses implement ``_value(mask)``; the public entry point is
    :func:`evaluate` or calling the oracle with an iterable of elements.
    Declared flags are claims checked by :func:`verify_properties`.
    """

    kind = "abstract"

    def __init__(self, n: int, symmetric: bool = False, monotone: bool = False):
        self.n = n
        self.symmetric = bool(symmetric)
        self.monotone = bool(monotone)
        self._table: Optional[ValueTable] = None
        self._lock = threading.Lock()

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"

    def _value(self, mask: int):
        raise NotImplementedError

    def value(self, mask: int):
        return self._value(mask)

    def __call__(self, subset):
        return self._value(to_mask(subset, self.n))

    def _build_table(self) -> ValueTable:
        return pack_values([self._value(m) for m in range(1 << self.n)])

    def table(self) -> ValueTable:
        if self.n > MAX_TABLE_N:
            raise ResourceLimitError(f"value table for n={self.n} exceeds 2**{MAX_TABLE_N}")
        with self._lock:
            if self._table is None:
                self._table = self._build_table()
            return self._table

    def fingerprint(self) -> str:
        t = self.table()
        h = hashlib.sha256()
        h.update(self.kind.encode())
        h.update(str(t.scale).encode())
        h.update(t.values.tobytes())
        return h.hexdigest()[:16]


class GraphCut(SetFunction):
    kind = "graph-cut"

    def __init__(self, graph: WeightedGraph):
        super().__init__(graph.n, symmetric=True, monotone=False)
        self.graph = graph

    def _value(self, mask):
        return self.graph.cut(mask)

    def _build_table(self):
        g = self.graph
        if not g.edges:
            return ValueTable(np.zeros(1 << g.n, dtype=np.int64), 1)
        us = np.array([e[0] for e in g.edges], dtype=np.int64)
        vs = np.array([e[1] for e in g.edges], dtype=np.int64)
        ws, scale = _weight_array([e[2] for e in g.edges])
        return ValueTable(_kernels.cut_table(g.n, us, vs, ws), scale)


class GraphCoverage(SetFunction):
    kind = "graph-coverage"

    def __init__(self, graph: WeightedGraph):
        super().__init__(graph.n, symmetric=False, monotone=True)
        self.graph = graph

    def _value(self, mask):
        s = 0
        for u, v, w in self.graph.edges:
            if ((mask >> u) | (mask >> v)) & 1:
                s += w
        return as_number(s)

    def _build_table(self):
        g = self.graph
        if not g.edges:
            return ValueTable(np.zeros(1 << g.n, dtype=np.int64), 1)
        us = np.array([e[0] for e in g.edges], dtype=np.int64)
        vs = np.array([e[1] for e in g.edges], dtype=np.int64)
        ws, scale = _weight_array([e[2] for e in g.edges])
        return ValueTable(_kernels.coverage_table(g.n, us, vs, ws), scale)


class HypergraphCut(SetFunction):
    """Weight of hyperedges meeting both ``S`` and its complement."""

    kind = "hypergraph-cut"

    def __init__(self, hypergraph: WeightedHypergraph):
        super().__init__(hypergraph.n, symmetric=True, monotone=False)
        self.hypergraph = hypergraph

    def _value(self, mask):
        s = 0
        for h, (_, w) in zip(self.hypergraph.masks, self.hypergraph.hyperedges):
            x = mask & h
            if x and x != h:
                s += w
        return as_number(s)

    def _build_table(self):
        hg = self.hypergraph
        if not hg.hyperedges:
            return ValueTable(np.zeros(1 << hg.n, dtype=np.int64), 1)
        hm = np.array(hg.masks, dtype=np.int64)
        ws, scale = _weight_array([w for _, w in hg.hyperedges])
        return ValueTable(_kernels.hypercut_table(hg.n, hm, ws), scale)


class MatroidRank(SetFunction):
    kind = "matroid-rank"

    def __init__(self, matroid):
        super().__init__(matroid.n, symmetric=False, monotone=True)
        self.matroid = matroid

    def _value(self, mask):
        return self.matroid.rank_mask(mask)


class ExplicitTable(SetFunction):
    kind = "explicit-table"

    def __init__(self, values: Sequence, symmetric: bool = False, monotone: bool = False):
        n = len(values).bit_length() - 1
        if n < 1 or len(values) != 1 << n:
            raise InvalidArgumentError("table length must be 2**n with n >= 1")
        vals = [as_number(v) for v in values]
        if vals[0] != 0:
            raise InvalidArgumentError("f(empty set) must be 0")
        if any(v < 0 for v in vals):
            raise InvalidArgumentError("set function values must be nonnegative")
        super().__init__(n, symmetric=symmetric, monotone=monotone)
        self.values = tuple(vals)

    def _value(self, mask):
        return self.values[mask]

    def _build_table(self):
        return pack_values(self.values)


class SumFunction(SetFunction):
    """Nonnegative combination ``sum(c_i * f_i)`` of oracles on the same ground set."""

    kind = "sum"

    def __init__(self, terms):
        terms = [(_check_weight(c, "sum coefficient"), f) for c, f in terms]
        if not terms:
            raise InvalidArgumentError("sum needs at least one term")
        n = terms[0][1].n
        if any(f.n != n for _, f in terms):
            raise InvalidArgumentError("sum terms disagree on ground size")
        sym = all(f.symmetric or c == 0 for c, f in terms)
        mono = all(f.monotone or c == 0 for c, f in terms)
        super().__init__(n, symmetric=sym, monotone=mono)
        self.terms = tuple(terms)

    def _value(self, mask):
        return as_number(sum(c * f.value(mask) for c, f in self.terms))


# -- operations ------------------------------------------------------------

def evaluate(oracle: SetFunction, subset):
    return oracle(subset)


def partition_value(oracle: SetFunction, partition: Partition):
    partition.validate(oracle.n)
    return as_number(sum(oracle.value(to_mask(b, oracle.n)) for b in partition.blocks))


@dataclass
class PropertyReport:
    submodular: bool
    symmetric: bool
    monotone: bool
    mode: str  # "pairs", "local" or "sampled"
    submodular_witness: Optional[tuple] = None
    symmetric_witness: Optional[frozenset] = None
    monotone_witness: Optional[tuple] = None

    @property
    def sampled(self) -> bool:
        return self.mode == "sampled"

    def to_dict(self) -> dict:
        def fs(x):
            return sorted(x) if x is not None else None

        return {
            "submodular": self.submodular,
            "symmetric": self.symmetric,
            "monotone": self.monotone,
            "mode": self.mode,
            "sampled": self.sampled,
            "submodular_witness": [fs(a) for a in self.submodular_witness] if self.submodular_witness else None,
            "symmetric_witness": fs(self.symmetric_witness),
            "monotone_witness": [fs(a) for a in self.monotone_witness] if self.monotone_witness else None,
        }


def verify_properties(oracle: SetFunction, samples: int = 20000, seed: int = 0) -> PropertyReport:
    """Check submodularity, symmetry and monotonicity of ``oracle``.

    n <= 12 checks every pair (A, B); n <= 20 uses the equivalent local
    condition f(S+u) + f(S+v) >= f(S+u+v) + f(S); larger ground sets are
    sampled and flagged as such.
    """
    n = oracle.n
    if n > 20:
        return _sampled_properties(oracle, samples, seed)
    t = oracle.table()
    eps = t.eps
    if n <= 12:
        a, b = _kernels.submodular_pairs(t.values, eps)
        mode = "pairs"
    else:
        a, b = _kernels.submodular_local(t.values, n, eps)
        mode = "local"
    sym = _kernels.symmetric_check(t.values, eps)
    ma, mb = _kernels.monotone_check(t.values, n, eps)
    return PropertyReport(
        submodular=a < 0,
        symmetric=sym < 0,
        monotone=ma < 0,
        mode=mode,
        submodular_witness=None if a < 0 else (from_mask(int(a)), from_mask(int(b))),
        symmetric_witness=None if sym < 0 else from_mask(int(sym)),
        monotone_witness=None if ma < 0 else (from_mask(int(ma)), from_mask(int(mb))),
    )


def _sampled_properties(oracle, samples, seed):
    rng = random.Random(seed)
    n = oracle.n
    full = full_mask(n)
    f = oracle.value
    sub = sym = mono = None
    for _ in range(samples):
        A, B = rng.getrandbits(n), rng.getrandbits(n)
        fa, fb = f(A), f(B)
        exact = is_exact(fa) and is_exact(fb)
        tol = 0 if exact else EPS
        if sub is None and fa + fb < f(A | B) + f(A & B) - tol:
            sub = (from_mask(A), from_mask(B))
        if sym is None and abs(fa - f(full ^ A)) > tol:
            sym = from_mask(A)
        if mono is None and fa > f(A | B) + tol:
            mono = (from_mask(A), from_mask(A | B))
    return PropertyReport(sub is None, sym is None, mono is None, "sampled", sub, sym, mono)

