"""Problem instances and their versioned JSON file format.

Top-level fields::

    version   int, currently 1
    ground    {"n": int, "labels": [str] | null}
    k         int, must equal the rank of every matroid
    function  {"kind": ..., kind-specific payload}
    matroids  list of one or two {"kind": ..., payload}
    mode      "single" | "double" | "common"
    metadata  free-form object (generator, seed, params)

Weights are JSON integers, floats, or strings "p/q" for exact rationals.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .core import GroundSet, as_number, iter_bits
from .errors import SubMCPError, ValidationError
from .matroid import (Contraction, Dual, ExplicitBasesMatroid, GraphicMatroid, LaminarMatroid,
                      Matroid, PartitionMatroid, PavingMatroid, TreeEdgeMatroid, Truncation,
                      UniformMatroid)
from .submodular import (ExplicitTable, GraphCoverage, GraphCut, HypergraphCut, MatroidRank,
                         SetFunction, SumFunction, WeightedGraph, WeightedHypergraph)

SCHEMA_VERSION = 1
MODES = ("single", "double", "common")


@dataclass
class Instance:
    ground: GroundSet
    function: SetFunction
    matroids: tuple
    k: int
    mode: str = "single"
    metadata: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def matroid(self) -> Matroid:
        return self.matroids[0]

    @property
    def matroid2(self) -> Optional[Matroid]:
        return self.matroids[1] if len(self.matroids) > 1 else None

    def validate(self) -> None:
        n = self.ground.n
        if self.function.n != n:
            raise ValidationError(f"function ground size {self.function.n} != {n}", "function")
        if self.mode not in MODES:
            raise ValidationError(f"unknown mode {self.mode!r}", "mode")
        want = 1 if self.mode == "single" else 2
        if len(self.matroids) != want:
            raise ValidationError(f"mode {self.mode} needs {want} matroid(s)", "matroids")
        for i, M in enumerate(self.matroids):
            if M.n != n:
                raise ValidationError(f"matroid ground size {M.n} != {n}", f"matroids[{i}]")
            if M.full_rank != self.k:
                raise ValidationError(f"matroid rank {M.full_rank} != k = {self.k}", f"matroids[{i}]")

    def to_dict(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "ground": {"n": self.ground.n,
                       "labels": list(self.ground.labels) if self.ground.labels else None},
            "k": self.k,
            "function": function_to_dict(self.function),
            "matroids": [matroid_to_dict(M) for M in self.matroids],
            "mode": self.mode,
            "metadata": self.metadata,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


# -- numbers ---------------------------------------------------------------

def encode_number(x):
    x = as_number(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def _decode_number(x, path):
    if isinstance(x, bool) or not isinstance(x, (int, float, str)):
        raise ValidationError(f"expected a number, got {x!r}", path)
    try:
        v = as_number(x)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"bad number {x!r}", path) from None
    return v


def _get(d, key, path, kind=None):
    if not isinstance(d, dict):
        raise ValidationError("expected an object", path)
    if key not in d:
        raise ValidationError(f"missing field {key!r}", path)
    v = d[key]
    if kind is not None and not isinstance(v, kind) or isinstance(v, bool) and kind is int:
        raise ValidationError(f"field {key!r} has wrong type", f"{path}.{key}")
    return v


def _int_list(v, path):
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ValidationError("expected a list of integers", path)
    return v


# -- functions -------------------------------------------------------------

def function_to_dict(f: SetFunction) -> dict:
    if isinstance(f, (GraphCut, GraphCoverage)):
        return {"kind": f.kind, "edges": [[u, v, encode_number(w)] for u, v, w in f.graph.edges]}
    if isinstance(f, HypergraphCut):
        return {"kind": f.kind,
                "hyperedges": [[list(m), encode_number(w)] for m, w in f.hypergraph.hyperedges]}
    if isinstance(f, MatroidRank):
        return {"kind": f.kind, "matroid": matroid_to_dict(f.matroid)}
    if isinstance(f, ExplicitTable):
        return {"kind": f.kind, "values": [encode_number(v) for v in f.values],
                "symmetric": f.symmetric, "monotone": f.monotone}
    if isinstance(f, SumFunction):
        return {"kind": f.kind,
                "terms": [{"coef": encode_number(c), "function": function_to_dict(g)}
                          for c, g in f.terms]}
    raise ValidationError(f"cannot serialise oracle {type(f).__name__}")


def function_from_dict(d, n: int, path: str = "function") -> SetFunction:
    kind = _get(d, "kind", path, str)
    try:
        if kind in ("graph-cut", "graph-coverage"):
            edges = _get(d, "edges", path, list)
            parsed = []
            for i, e in enumerate(edges):
                p = f"{path}.edges[{i}]"
                if not isinstance(e, list) or len(e) not in (2, 3):
                    raise ValidationError("edge must be [u, v] or [u, v, w]", p)
                _int_list(e[:2], p)
                parsed.append((e[0], e[1], _decode_number(e[2], p) if len(e) == 3 else 1))
            g = _wrap(lambda: WeightedGraph(n, parsed), f"{path}.edges")
            return GraphCut(g) if kind == "graph-cut" else GraphCoverage(g)
        if kind == "hypergraph-cut":
            hes = _get(d, "hyperedges", path, list)
            parsed = []
            for i, h in enumerate(hes):
                p = f"{path}.hyperedges[{i}]"
                if not isinstance(h, list) or len(h) != 2:
                    raise ValidationError("hyperedge must be [[members], weight]", p)
                parsed.append((_int_list(h[0], p), _decode_number(h[1], p)))
            return HypergraphCut(_wrap(lambda: WeightedHypergraph(n, parsed), f"{path}.hyperedges"))
        if kind == "matroid-rank":
            return MatroidRank(matroid_from_dict(_get(d, "matroid", path), n, f"{path}.matroid"))
        if kind == "explicit-table":
            vals = [_decode_number(v, f"{path}.values[{i}]")
                    for i, v in enumerate(_get(d, "values", path, list))]
            if len(vals) != 1 << n:
                raise ValidationError(f"expected 2**{n} values, got {len(vals)}", f"{path}.values")
            return _wrap(lambda: ExplicitTable(vals, bool(d.get("symmetric", False)),
                                               bool(d.get("monotone", False))), path)
        if kind == "sum":
            terms = []
            for i, t in enumerate(_get(d, "terms", path, list)):
                p = f"{path}.terms[{i}]"
                terms.append((_decode_number(_get(t, "coef", p), f"{p}.coef"),
                              function_from_dict(_get(t, "function", p), n, f"{p}.function")))
            return _wrap(lambda: SumFunction(terms), path)
    except ValidationError:
        raise
    raise ValidationError(f"unknown function kind {kind!r}", f"{path}.kind")


def _wrap(build, path):
    try:
        return build()
    except ValidationError as e:
        if e.field and path:
            raise ValidationError(str(e).split(": ", 1)[-1], f"{path}.{e.field}") from None
        raise
    except (SubMCPError, ValueError, TypeError, IndexError) as e:
        raise ValidationError(str(e), path) from None


# -- matroids --------------------------------------------------------------

def matroid_to_dict(M: Matroid) -> dict:
    if isinstance(M, UniformMatroid):
        return {"kind": M.kind, "rank": M.r}
    if isinstance(M, PartitionMatroid):
        return {"kind": M.kind, "classes": [list(c) for c in M.classes],
                "capacities": list(M.capacities)}
    if isinstance(M, LaminarMatroid):
        return {"kind": M.kind, "family": [list(s) for s in M.family],
                "bounds": list(M.bounds), "cap": M.cap}
    if isinstance(M, GraphicMatroid):
        return {"kind": M.kind, "vertices": M.num_vertices, "edges": [list(e) for e in M.edges]}
    if isinstance(M, PavingMatroid):
        return {"kind": M.kind, "rank": M.r, "hyperedges": [list(h) for h in M.hyperedges]}
    if isinstance(M, ExplicitBasesMatroid):
        return {"kind": M.kind, "bases": [list(iter_bits(b)) for b in M.bases]}
    if isinstance(M, Truncation):
        return {"kind": M.kind, "k": M.k, "inner": matroid_to_dict(M.inner)}
    if isinstance(M, Contraction):
        return {"kind": M.kind, "contracted": list(M.contracted), "inner": matroid_to_dict(M.inner)}
    if isinstance(M, Dual):
        return {"kind": M.kind, "inner": matroid_to_dict(M.inner)}
    if isinstance(M, TreeEdgeMatroid):
        return {"kind": M.kind, "vertices": M.tree.n,
                "tree": [[u, v, encode_number(w)] for u, v, w in M.tree.edges],
                "inner": matroid_to_dict(M.inner)}
    raise ValidationError(f"cannot serialise matroid {type(M).__name__}")


def _sets(d, key, path):
    v = _get(d, key, path, list)
    return [_int_list(s, f"{path}.{key}[{i}]") for i, s in enumerate(v)]


def matroid_from_dict(d, n: int, path: str = "matroid") -> Matroid:
    kind = _get(d, "kind", path, str)
    if kind == "uniform":
        r = _get(d, "rank", path, int)
        return _wrap(lambda: UniformMatroid(n, r), path)
    if kind == "partition":
        classes = _sets(d, "classes", path)
        caps = _int_list(d.get("capacities", [1] * len(classes)), f"{path}.capacities")
        return _wrap(lambda: PartitionMatroid(n, classes, caps), path)
    if kind == "laminar":
        fam = _sets(d, "family", path)
        bounds = _int_list(_get(d, "bounds", path, list), f"{path}.bounds")
        cap = d.get("cap")
        return _wrap(lambda: LaminarMatroid(n, fam, bounds, cap), path)
    if kind == "graphic":
        nv = _get(d, "vertices", path, int)
        edges = _sets(d, "edges", path)
        if len(edges) != n:
            raise ValidationError(f"graphic matroid has {len(edges)} edges, ground size {n}",
                                  f"{path}.edges")
        return _wrap(lambda: GraphicMatroid(nv, edges), path)
    if kind == "paving":
        r = _get(d, "rank", path, int)
        hs = _sets(d, "hyperedges", path)
        return _wrap(lambda: PavingMatroid(n, r, hs), path)
    if kind == "explicit-bases":
        bs = _sets(d, "bases", path)
        return _wrap(lambda: ExplicitBasesMatroid(n, bs), path)
    if kind == "truncation":
        k = _get(d, "k", path, int)
        inner = matroid_from_dict(_get(d, "inner", path), n, f"{path}.inner")
        return _wrap(lambda: Truncation(inner, k), path)
    if kind == "contraction":
        z = _int_list(_get(d, "contracted", path, list), f"{path}.contracted")
        inner = matroid_from_dict(_get(d, "inner", path), n + len(set(z)), f"{path}.inner")
        return _wrap(lambda: Contraction(inner, z), path)
    if kind == "dual":
        return Dual(matroid_from_dict(_get(d, "inner", path), n, f"{path}.inner"))
    if kind == "tree-edge":
        nv = _get(d, "vertices", path, int)
        if nv != n + 1:
            raise ValidationError(f"tree on {nv} vertices has {nv - 1} edges, ground size {n}",
                                  f"{path}.vertices")
        edges = []
        for i, e in enumerate(_get(d, "tree", path, list)):
            p = f"{path}.tree[{i}]"
            if not isinstance(e, list) or len(e) not in (2, 3):
                raise ValidationError("edge must be [u, v] or [u, v, w]", p)
            edges.append((e[0], e[1], _decode_number(e[2], p) if len(e) == 3 else 1))
        tree = _wrap(lambda: WeightedGraph(nv, edges), f"{path}.tree")
        inner = matroid_from_dict(_get(d, "inner", path), nv, f"{path}.inner")
        return _wrap(lambda: TreeEdgeMatroid(tree, inner), path)
    raise ValidationError(f"unknown matroid kind {kind!r}", f"{path}.kind")


# -- files -----------------------------------------------------------------

def instance_from_dict(d) -> Instance:
    if not isinstance(d, dict):
        raise ValidationError("instance must be a JSON object")
    version = _get(d, "version", "", int)
    if version != SCHEMA_VERSION:
        raise ValidationError(f"unsupported schema version {version}", "version")
    g = _get(d, "ground", "", dict)
    n = _get(g, "n", "ground", int)
    labels = g.get("labels")
    ground = _wrap(lambda: GroundSet(n, tuple(labels) if labels else None), "ground")
    k = _get(d, "k", "", int)
    f = function_from_dict(_get(d, "function", ""), n)
    ms = _get(d, "matroids", "", list)
    if not 1 <= len(ms) <= 2:
        raise ValidationError("need one or two matroids", "matroids")
    matroids = tuple(matroid_from_dict(m, n, f"matroids[{i}]") for i, m in enumerate(ms))
    mode = d.get("mode", "single" if len(ms) == 1 else "double")
    meta = d.get("metadata", {})
    if not isinstance(meta, dict):
        raise ValidationError("metadata must be an object", "metadata")
    inst = Instance(ground, f, matroids, k, mode, meta)
    inst.validate()
    return inst


def loads_instance(text: str) -> Instance:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"invalid JSON: {e.msg}", f"line {e.lineno} col {e.colno}") from None
    return instance_from_dict(d)


def load_instance(path) -> Instance:
    return loads_instance(Path(path).read_text())


def save_instance(instance: Instance, path) -> None:
    Path(path).write_text(instance.dumps())
