import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import unit_triangle
from submcp import (GraphCut, Instance, PavingMatroid, UniformMatroid, ValidationError,
                    WeightedGraph, load_instance, save_instance)
from submcp.core import GroundSet
from submcp.generators import FUNCTION_KINDS, MATROID_KINDS, generate
from submcp.instance import instance_from_dict, loads_instance
from submcp.matroid import Contraction, Dual, ExplicitBasesMatroid, TreeEdgeMatroid, Truncation


def triangle_instance():
    return Instance(GroundSet(3, ("a", "b", "c")), unit_triangle(), (UniformMatroid(3, 2),), 2)


def assert_same(x: Instance, y: Instance):
    n = x.n
    assert (x.k, x.mode, x.ground, x.metadata) == (y.k, y.mode, y.ground, y.metadata)
    assert all(x.function.value(m) == y.function.value(m) for m in range(1 << n))
    for M, N in zip(x.matroids, y.matroids, strict=True):
        assert all(M.indep(m) == N.indep(m) for m in range(1 << n))


def test_triangle_round_trip(tmp_path):
    inst = triangle_instance()
    p = tmp_path / "tri.json"
    save_instance(inst, p)
    back = load_instance(p)
    assert_same(inst, back)
    assert back.dumps() == inst.dumps()


def test_paving_violation_names_field():
    d = triangle_instance().to_dict()
    d["ground"] = {"n": 5, "labels": None}
    d["k"] = 3
    d["function"] = {"kind": "graph-cut", "edges": [[0, 1, 1]]}
    d["matroids"] = [{"kind": "paving", "rank": 3, "hyperedges": [[0, 1, 2], [0, 1, 3]]}]
    with pytest.raises(ValidationError) as e:
        instance_from_dict(d)
    assert "matroids[0].hyperedges[1]" in str(e.value)
    assert e.value.exit_code == 1


def test_missing_k():
    d = triangle_instance().to_dict()
    del d["k"]
    with pytest.raises(ValidationError, match="k"):
        instance_from_dict(d)


def test_bad_json_reports_position():
    with pytest.raises(ValidationError, match="line 2"):
        loads_instance('{\n  "version": 1,,\n}')


@pytest.mark.parametrize("mutate, field", [
    (lambda d: d.update(version=99), "version"),
    (lambda d: d.update(k=3), "matroids[0]"),
    (lambda d: d.update(mode="triple"), "mode"),
    (lambda d: d["function"].update(edges=[[0, 0, 1]]), "function"),
    (lambda d: d["function"].update(kind="nope"), "function"),
    (lambda d: d["matroids"][0].update(rank="2"), "matroids[0]"),
])
def test_invalid_payloads(mutate, field):
    d = json.loads(triangle_instance().dumps())
    mutate(d)
    with pytest.raises(ValidationError) as e:
        instance_from_dict(d)
    assert field in str(e.value)


def test_rational_weights_round_trip():
    g = WeightedGraph(3, [(0, 1, Fraction(1, 3)), (1, 2, 2)])
    inst = Instance(GroundSet(3), GraphCut(g), (UniformMatroid(3, 2),), 2)
    text = inst.dumps()
    assert '"1/3"' in text
    assert_same(inst, loads_instance(text))


def test_derived_matroids_round_trip():
    base = PavingMatroid(5, 3, [[0, 1, 2]])
    tree = WeightedGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    f = GraphCut(WeightedGraph(4, [(0, 1), (2, 3)]))
    for M in (Truncation(base, 2), Dual(Truncation(base, 3)),
              ExplicitBasesMatroid(5, [{0, 1}, {0, 2}, {1, 2}])):
        inst = Instance(GroundSet(5), GraphCut(tree), (M,), M.full_rank)
        assert_same(inst, loads_instance(inst.dumps()))
    C = Contraction(base, {4})  # 4 elements, rank 2
    inst = Instance(GroundSet(4), f, (C,), 2)
    assert_same(inst, loads_instance(inst.dumps()))
    TE = TreeEdgeMatroid(tree, base)  # 4 edges, rank 2
    inst = Instance(GroundSet(4), f, (TE,), 2)
    assert_same(inst, loads_instance(inst.dumps()))


@given(st.integers(0, 10**6), st.sampled_from(FUNCTION_KINDS), st.sampled_from(MATROID_KINDS))
def test_generated_round_trip(seed, fkind, mkind):
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    k = rng.randint(1, n)
    inst = generate("random", {"n": n, "k": k, "function": fkind, "matroid": mkind}, seed)
    back = loads_instance(inst.dumps())
    assert_same(inst, back)
    assert back.dumps() == inst.dumps()
