"""Acceptance criteria, checked at desk scale against brute force.

Each criterion prints one ``PASS``/``FAIL`` line.  Run directly with
``python tests/test_acceptance.py`` or through pytest (lines are repeated in
the terminal summary).
"""
from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from functools import lru_cache

import pytest

from submcp import (GraphCut, TieBreakPolicy, TreeEdgeMatroid, brute_force_opt,
                    double_tree_multiway_cut, generate, gomory_hu_tree, has_transversal_basis,
                    matroid_intersection_max, max_weight_common_independent, run_experiment,
                    tree_multiway_cut)
from submcp.core import Partition
from submcp.generators import (common_mc_instance, has_common_basis, random_function,
                               random_graph, random_matroid)
from submcp.matroid import brute_max_common, brute_weighted_common, check_axioms

RESULTS: dict = {}

BASE_MATROIDS = ("uniform", "partition", "graphic", "paving")
ALL_MATROIDS = BASE_MATROIDS + ("laminar",)


def record(num: int, name: str, ok: bool, detail: str) -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d} {name}: {detail}"
    RESULTS[num] = line
    print(line)
    return ok


def _pool(functions, count, seed0, nmin=4, nmax=9):
    out = []
    for i in range(count):
        seed = seed0 + i
        n = nmin + i % (nmax - nmin + 1)
        k = 2 + (i // 7) % 3
        params = {"n": n, "k": k, "function": functions[i % len(functions)],
                  "matroid": BASE_MATROIDS[(i // 3) % len(BASE_MATROIDS)]}
        out.append((f"{params['function']}-{seed:05d}", generate("random", params, seed)))
    return out


@lru_cache(maxsize=None)
def symmetric_report():
    pool = _pool(("graph-cut", "hypergraph-cut"), 300, 10_000)
    return run_experiment(pool, ("gh_greedy", "greedy_split"), verify=True)


@lru_cache(maxsize=None)
def monotone_report():
    pool = _pool(("graph-coverage", "matroid-rank"), 300, 20_000)
    return run_experiment(pool, ("greedy_split", "cheapest_singleton"), verify=True)


@lru_cache(maxsize=None)
def general_report():
    pool = _pool(("general",), 300, 30_000)
    return run_experiment(pool, ("greedy_split",), verify=True)


def _rows(report, algorithm):
    return [r for r in report.rows if r.algorithm == algorithm]


def _k(row) -> int:
    return len(row.partition)


# -- criteria --------------------------------------------------------------

def criterion_1():
    t0 = time.perf_counter()
    rows = _rows(symmetric_report(), "gh_greedy")
    bad = [r for r in rows
           if r.skipped or not r.verified or r.bound != 2 - Fraction(2, _k(r))]
    worst = max(Fraction(r.ratio) for r in rows)
    ok = len(rows) >= 300 and not bad
    return record(1, "gh_greedy <= (2-2/k) OPT on symmetric oracles", ok,
                  f"{len(rows)} instances, {len(bad)} violations, worst ratio {worst}, "
                  f"{time.perf_counter() - t0:.1f}s")


def criterion_2():
    t0 = time.perf_counter()
    sym = _rows(symmetric_report(), "greedy_split")
    mono = _rows(monotone_report(), "greedy_split")
    gen = _rows(general_report(), "greedy_split")
    bad = [r for r in sym + mono + gen if r.skipped or not r.verified]
    # the general pool must be held to k-1, the others to 2-2/k
    general_ids = {id(r) for r in gen}
    ran = [r for r in sym + mono + gen if not r.skipped]
    wrong_bound = [r for r in ran if r.bound != (max(_k(r) - 1, 1) if id(r) in general_ids
                                                 else 2 - Fraction(2, _k(r)))]
    worst = {name: max(Fraction(r.ratio) for r in rs)
             for name, rs in (("symmetric", sym), ("monotone", mono), ("general", gen))}
    ok = min(len(sym), len(mono), len(gen)) >= 300 and not bad and not wrong_bound
    return record(2, "greedy_split bounds (sym/mono 2-2/k, general k-1)", ok,
                  f"{len(sym)}+{len(mono)}+{len(gen)} instances, {len(bad)} violations, "
                  f"worst ratios {', '.join(f'{k} {v}' for k, v in worst.items())}, "
                  f"{time.perf_counter() - t0:.1f}s")


def criterion_3():
    t0 = time.perf_counter()
    pool = _pool(("graph-coverage",), 200, 40_000)
    rows = _rows(run_experiment(pool, ("gh_greedy",), verify=True), "gh_greedy")
    bad = [r for r in rows if r.skipped or not r.verified or r.bound != Fraction(4, 3)]
    worst = max(Fraction(r.ratio) for r in rows)
    ok = len(rows) >= 200 and not bad
    return record(3, "gh_greedy on coverage <= 4/3 OPT", ok,
                  f"{len(rows)} instances, {len(bad)} violations, worst ratio {worst}, "
                  f"{time.perf_counter() - t0:.1f}s")


def criterion_4():
    t0 = time.perf_counter()
    single_bad = double_bad = 0
    count = 200
    for i in range(count):
        rng = random.Random(50_000 + i)
        n = 2 + i % 9
        k = 1 + (i // 9) % min(4, n)
        T = random_graph(rng, n, tree=True)
        f = GraphCut(T)
        M1 = random_matroid(rng, n, k, ALL_MATROIDS[i % 5])
        M2 = random_matroid(rng, n, k, ALL_MATROIDS[(i // 5) % 5])
        _, v1 = tree_multiway_cut(T, M1)
        single_bad += v1 != brute_force_opt(f, M1)[1]
        P, v2 = double_tree_multiway_cut(T, M1, M2)
        ok2 = P.check_witness(M1) and P.check_witness(M2, P.witness2)
        double_bad += (not ok2) or v2 != brute_force_opt(f, M1, M2)[1]
    ok = single_bad == 0 and double_bad == 0
    return record(4, "tree solvers equal brute force", ok,
                  f"{count} trees (n<=10), mismatches single {single_bad}, double {double_bad}, "
                  f"{time.perf_counter() - t0:.1f}s")


def criterion_5():
    got = {}
    for k in (3, 4, 5):
        inst = generate("tightness", {"k": k})
        rep = run_experiment([(f"t{k}", inst)], ("greedy_split",), verify=True,
                             policy=TieBreakPolicy.parse("adversarial"))
        (row,) = rep.rows
        got[k] = (row.value, row.opt, row.ratio)
    ok = all(got[k] == (2 * k - 2, k, 2 - Fraction(2, k)) for k in got)
    return record(5, "tightness reproduction", ok,
                  "; ".join(f"k={k}: value {v}, OPT {o}, ratio {r}" for k, (v, o, r) in got.items()))


def criterion_6():
    t0 = time.perf_counter()
    bad_value = bad_side = pairs = 0
    count = 100
    for i in range(count):
        rng = random.Random(60_000 + i)
        n = 2 + i % 8
        f = random_function(rng, n, ("graph-cut", "hypergraph-cut")[i % 2])
        T = gomory_hu_tree(f)
        table = f.table()
        for s in range(n):
            for t in range(s + 1, n):
                pairs += 1
                best = min(table[S] for S in range(1 << n) if S >> s & 1 and not S >> t & 1)
                value, side = T.min_cut(s, t)
                bad_value += value != best
                bad_side += f(side) != best or s not in side or t in side
    ok = bad_value == 0 and bad_side == 0
    return record(6, "Gomory-Hu all-pairs min cuts", ok,
                  f"{count} oracles, {pairs} pairs, value mismatches {bad_value}, "
                  f"side mismatches {bad_side}, {time.perf_counter() - t0:.1f}s")


def criterion_7():
    t0 = time.perf_counter()
    axiom_bad = rank_bad = 0
    count = 200
    for i in range(count):
        rng = random.Random(70_000 + i)
        n = 2 + i % 7
        k = 1 + (i // 7) % n
        T = random_graph(rng, n, tree=True)
        M = random_matroid(rng, n, k, ALL_MATROIDS[i % 5])
        TE = TreeEdgeMatroid(T, M)
        axiom_bad += check_axioms(TE) is not None
        rank_bad += TE.full_rank != M.full_rank - 1
    ok = axiom_bad == 0 and rank_bad == 0
    return record(7, "tree-edge matroid axioms", ok,
                  f"{count} pairs (n<=8), axiom failures {axiom_bad}, rank mismatches {rank_bad}, "
                  f"{time.perf_counter() - t0:.1f}s")


def criterion_8():
    t0 = time.perf_counter()
    card_bad = weight_bad = 0
    count = 200
    for i in range(count):
        rng = random.Random(80_000 + i)
        n = 1 + i % 10
        M1 = random_matroid(rng, n, rng.randint(1, n), ALL_MATROIDS[i % 5])
        M2 = random_matroid(rng, n, rng.randint(1, n), ALL_MATROIDS[(i // 5) % 5])
        I = matroid_intersection_max(M1, M2)
        card_bad += (len(I) != brute_max_common(M1, M2)
                     or not (M1.is_independent(I) and M2.is_independent(I)))
    for i in range(count):
        rng = random.Random(81_000 + i)
        n = 1 + i % 12
        M1 = random_matroid(rng, n, rng.randint(1, n), ALL_MATROIDS[i % 5])
        M2 = random_matroid(rng, n, rng.randint(1, n), ALL_MATROIDS[(i // 5) % 5])
        w = [rng.randint(0, 20) for _ in range(n)]
        card, wcard, _ = brute_weighted_common(M1, M2, w)
        I, total = max_weight_common_independent(M1, M2, w)
        weight_bad += (len(I) != card or total != wcard
                       or not (M1.is_independent(I) and M2.is_independent(I)))
    ok = card_bad == 0 and weight_bad == 0
    return record(8, "matroid intersection vs brute force", ok,
                  f"{count} pairs (n<=10) cardinality mismatches {card_bad}; "
                  f"{count} pairs (n<=12) weighted mismatches {weight_bad}, "
                  f"{time.perf_counter() - t0:.1f}s")


def criterion_9():
    t0 = time.perf_counter()
    missing = 0
    count = 200
    for i in range(count):
        rng = random.Random(90_000 + i)
        n = 2 + i % 9
        k = 1 + (i // 9) % n
        M = random_matroid(rng, n, k, "paving")
        labels = list(range(k)) + [rng.randrange(k) for _ in range(n - k)]
        rng.shuffle(labels)
        P = Partition.from_labels(labels)
        w = has_transversal_basis(M, P)
        missing += w is None or not P.check_witness(M, w)
    return record(9, "paving matroids always admit a transversal basis", missing == 0,
                  f"{count} (matroid, partition) pairs, missing witnesses {missing}, "
                  f"{time.perf_counter() - t0:.1f}s")


def criterion_10():
    t0 = time.perf_counter()
    bad = yes = no = 0
    count = 60
    for i in range(count):
        rng = random.Random(100_000 + i)
        m = 2 + i % 5
        r = 1 + (i // 5) % min(m, 8 - m)
        triple = []
        for _ in range(3):
            labels = list(range(r)) + [rng.randrange(r) for _ in range(m - r)]
            rng.shuffle(labels)
            triple.append([[e for e in range(m) if labels[e] == c] for c in range(r)])
        inst = common_mc_instance(*triple)
        assert inst.n <= 9
        _, opt = brute_force_opt(inst.function, inst.matroid, inst.matroid2, common=True)
        common = has_common_basis(*triple)
        yes += common
        no += not common
        bad += (opt == 0) != common
    ok = bad == 0 and yes > 0 and no > 0
    return record(10, "common-basis reduction: OPT 0 iff common basis", ok,
                  f"{count} triples ({yes} with, {no} without a common basis), "
                  f"mismatches {bad}, {time.perf_counter() - t0:.1f}s")


def criterion_11():
    t0 = time.perf_counter()
    rows = _rows(monotone_report(), "cheapest_singleton")
    bad = [r for r in rows if r.skipped or not r.verified or r.bound != 2 - Fraction(1, _k(r))]
    worst = max(Fraction(r.ratio) for r in rows)
    ok = len(rows) >= 300 and not bad
    return record(11, "cheapest_singleton <= (2-1/k) OPT on monotone oracles", ok,
                  f"{len(rows)} instances, {len(bad)} violations, worst ratio {worst}, "
                  f"{time.perf_counter() - t0:.1f}s")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 12)])
def test_acceptance(criterion):
    assert criterion(), RESULTS.get(CRITERIA.index(criterion) + 1)


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
