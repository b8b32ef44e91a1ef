"""The numba and numpy kernel backends must agree exactly."""
import os
import random
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from submcp import _kernels
from submcp.core import popcount
from submcp.generators import MATROID_KINDS, random_function, random_graph, random_matroid
from submcp.matroid import independent_sets
from submcp.submodular import ExplicitTable

NB = _kernels.numba_backend
NP = _kernels.numpy_backend

pytestmark = pytest.mark.skipif(NB is None, reason="numba not importable")


def _edges(g):
    us = np.array([u for u, _, _ in g.edges], dtype=np.int64)
    vs = np.array([v for _, v, _ in g.edges], dtype=np.int64)
    ws = np.array([w for _, _, w in g.edges], dtype=np.int64)
    return us, vs, ws


@given(st.integers(0, 10**6), st.integers(1, 10))
def test_graph_tables(seed, n):
    g = random_graph(random.Random(seed), n)
    args = (n, *_edges(g))
    assert np.array_equal(NB.cut_table(*args), NP.cut_table(*args))
    assert np.array_equal(NB.coverage_table(*args), NP.coverage_table(*args))


@given(st.integers(0, 10**6), st.integers(2, 10))
def test_hypercut_tables(seed, n):
    rng = random.Random(seed)
    hm = np.array([sum(1 << e for e in rng.sample(range(n), rng.randint(1, n)))
                   for _ in range(5)], dtype=np.int64)
    ws = np.array([rng.randint(1, 9) for _ in range(5)], dtype=np.int64)
    assert np.array_equal(NB.hypercut_table(n, hm, ws), NP.hypercut_table(n, hm, ws))


def _perturbed_table(rng, n, float_mode=False):
    f = random_function(rng, n, "general")
    vals = [f.value(m) for m in range(1 << n)]
    for _ in range(rng.randint(0, 3)):
        vals[rng.randrange(1, 1 << n)] += rng.randint(0, 4)
    if float_mode:
        vals = [v * 0.5 for v in vals]
    return ExplicitTable(vals).table()


@given(st.integers(0, 10**6), st.integers(1, 8), st.booleans())
def test_property_checks(seed, n, float_mode):
    t = _perturbed_table(random.Random(seed), n, float_mode)
    assert NB.submodular_pairs(t.values, t.eps) == NP.submodular_pairs(t.values, t.eps)
    assert NB.submodular_local(t.values, n, t.eps) == NP.submodular_local(t.values, n, t.eps)
    assert NB.symmetric_check(t.values, t.eps) == NP.symmetric_check(t.values, t.eps)
    assert NB.monotone_check(t.values, n, t.eps) == NP.monotone_check(t.values, n, t.eps)


@given(st.integers(0, 10**6), st.integers(2, 9), st.integers(0, 1))
def test_min_split_enum(seed, n, mode):
    rng = random.Random(seed)
    t = _perturbed_table(rng, n)
    base = sum(1 << e for e in rng.sample(range(n), rng.randint(2, n)))
    nodes = np.array([1 << e for e in range(n) if base >> e & 1], dtype=np.int64)
    s, tt = rng.sample(range(len(nodes)), 2)
    got = NB.min_split_enum(t.values, nodes, s, tt, base, mode, t.eps)
    assert got == NP.min_split_enum(t.values, nodes, s, tt, base, mode, t.eps)
    assert got & nodes[s] and not got & nodes[tt]


@given(st.integers(0, 10**6), st.integers(1, 8), st.integers(1, 4), st.booleans())
def test_partition_search(seed, n, k, two):
    k = min(k, n)
    rng = random.Random(seed)
    t = _perturbed_table(rng, n)
    c1 = np.array(independent_sets(random_matroid(rng, n, k, rng.choice(MATROID_KINDS)), k),
                  dtype=np.int64)
    c2 = np.array(independent_sets(random_matroid(rng, n, k, "uniform"), k) if two else [],
                  dtype=np.int64)
    a = NB.partition_search(t.values, n, k, c1, c2, t.eps)
    b = NP.partition_search(t.values, n, k, c1, c2, t.eps)
    assert np.array_equal(a, b)


def test_rgs_counts():
    # Stirling numbers of the second kind
    assert len(NP.rgs(5, 2)) == 15
    assert len(NP.rgs(6, 3)) == 90
    assert len(NP.rgs(3, 4)) == 0
    rows = NP.rgs(4, 2)
    assert all(r[0] == 0 and max(r) == 1 for r in rows)


def test_env_flag_selects_numpy():
    code = "import submcp._kernels as k; print(k.BACKEND)"
    env = dict(os.environ, SUBMCP_NO_JIT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "numpy"
    env["SUBMCP_NO_JIT"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "numba"


def test_popcount_of_search_result():
    t = ExplicitTable([0] + [1] * 15).table()
    c1 = np.array([m for m in range(16) if popcount(m) == 2], dtype=np.int64)
    labels = NB.partition_search(t.values, 4, 2, c1, np.zeros(0, dtype=np.int64), t.eps)
    assert sorted(set(labels.tolist())) == [0, 1]
