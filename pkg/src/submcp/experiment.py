"""Run algorithms over instances, optionally checking proven ratios against brute force."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .algorithms import (TieBreakPolicy, brute_force_opt, cheapest_singleton,
                         double_tree_multiway_cut, gh_greedy, greedy_split, tree_multiway_cut)
from .core import is_exact, is_spanning_tree, leq
from .errors import InternalInvariantError, SubMCPError
from .instance import Instance
from .submodular import GraphCoverage, GraphCut, partition_value

ALGORITHMS = ("gh_greedy", "greedy_split", "cheapest_singleton", "tree_multiway_cut",
              "double_tree_multiway_cut")
COLUMNS = ("instance_id", "algorithm", "value", "opt", "ratio", "bound", "verified", "runtime_ms")


@dataclass
class ReportRow:
    instance_id: str
    algorithm: str
    value: object = None
    opt: object = None
    ratio: object = None
    bound: object = None
    verified: Optional[bool] = None
    runtime_ms: float = 0.0
    reason: str = ""
    partition: Optional[list] = None

    @property
    def skipped(self) -> bool:
        return self.value is None

    def csv_cells(self) -> list:
        if self.skipped:
            verified = f"skipped: {self.reason}"
        else:
            verified = "" if self.verified is None else str(self.verified).lower()
        return [self.instance_id, self.algorithm, _fmt(self.value), _fmt(self.opt),
                _fmt(self.ratio), _fmt(self.bound), verified, f"{self.runtime_ms:.3f}"]

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("value", "opt", "ratio", "bound"):
            d[key] = _jsonable(d[key])
        return d


@dataclass
class ExperimentReport:
    rows: list

    @property
    def ok(self) -> bool:
        return all(r.verified is not False for r in self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in self.rows:
            w.writerow(r.csv_cells())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([r.to_dict() for r in self.rows], indent=2) + "\n"


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    if isinstance(x, float):
        return "inf" if x == float("inf") else repr(x)
    return str(x)


def _jsonable(x):
    if isinstance(x, Fraction):
        return _fmt(x)
    if isinstance(x, float) and x == float("inf"):
        return "inf"
    return x


def _fraction(x):
    return Fraction(x) if is_exact(x) else x


def proven_bound(algorithm: str, inst: Instance):
    """(bound, None) for an applicable algorithm, else (None, reason)."""
    f, k = inst.function, inst.k
    single = inst.mode == "single"
    sym_bound = Fraction(2) - Fraction(2, k) if k >= 2 else Fraction(1)
    if algorithm == "gh_greedy":
        if not single:
            return None, f"needs a single matroid (mode {inst.mode})"
        if f.symmetric:
            return sym_bound, None
        if isinstance(f, GraphCoverage):
            return Fraction(4, 3) if k >= 2 else Fraction(1), None
        return None, f"needs a symmetric oracle, got {f.kind}"
    if algorithm == "greedy_split":
        if not single:
            return None, f"needs a single matroid (mode {inst.mode})"
        if f.symmetric or f.monotone:
            return sym_bound, None
        return Fraction(max(k - 1, 1)), None
    if algorithm == "cheapest_singleton":
        if not single:
            return None, f"needs a single matroid (mode {inst.mode})"
        if f.monotone:
            return Fraction(2) - Fraction(1, k), None
        return None, f"needs a monotone oracle, got {f.kind}"
    if algorithm in ("tree_multiway_cut", "double_tree_multiway_cut"):
        want = "single" if algorithm == "tree_multiway_cut" else "double"
        if inst.mode != want:
            return None, f"needs mode {want} (got {inst.mode})"
        if not isinstance(f, GraphCut) or not is_spanning_tree(f.n, f.graph.edges):
            return None, "needs a graph-cut oracle on a spanning tree"
        return Fraction(1), None
    return None, f"unknown algorithm {algorithm!r}"


def run_algorithm(algorithm: str, inst: Instance, policy: Optional[TieBreakPolicy] = None):
    """Run one algorithm; returns the partition (witnesses re-checked) and its value."""
    f = inst.function
    if algorithm == "gh_greedy":
        g = GraphCut(f.graph) if isinstance(f, GraphCoverage) else f
        P, _ = gh_greedy(g, inst.matroid)
    elif algorithm == "greedy_split":
        P, _ = greedy_split(f, inst.matroid, policy)
    elif algorithm == "cheapest_singleton":
        P = cheapest_singleton(f, inst.matroid)
    elif algorithm == "tree_multiway_cut":
        P, _ = tree_multiway_cut(f.graph, inst.matroid)
    elif algorithm == "double_tree_multiway_cut":
        P, _ = double_tree_multiway_cut(f.graph, inst.matroid, inst.matroid2)
    else:
        raise SubMCPError(f"unknown algorithm {algorithm!r}")
    check_feasible(P, inst)
    return P, partition_value(f, P)


def check_feasible(P, inst: Instance) -> None:
    P.validate(inst.n)
    if len(P.blocks) != inst.k or not P.check_witness(inst.matroid):
        raise InternalInvariantError("returned partition fails its witness check")
    if inst.mode == "double" and not P.check_witness(inst.matroid2, P.witness2):
        raise InternalInvariantError("returned partition fails its second witness check")


def optimum(inst: Instance):
    M2 = inst.matroid2
    return brute_force_opt(inst.function, inst.matroid, M2, common=inst.mode == "common")


def run_experiment(instances, algorithms=ALGORITHMS, verify: bool = False,
                   policy: Optional[TieBreakPolicy] = None) -> ExperimentReport:
    """``instances`` is an iterable of (instance_id, Instance)."""
    rows = []
    for iid, inst in instances:
        opt = None
        if verify:
            _, opt = optimum(inst)
        for alg in algorithms:
            bound, reason = proven_bound(alg, inst)
            row = ReportRow(iid, alg, opt=opt)
            if bound is None:
                row.reason = reason
                rows.append(row)
                continue
            row.bound = bound
            t0 = time.perf_counter()
            P, value = run_algorithm(alg, inst, policy)
            row.runtime_ms = (time.perf_counter() - t0) * 1000
            row.value = value
            row.partition = [sorted(b) for b in P.blocks]
            if verify:
                row.ratio = ratio(value, opt)
                row.verified = leq(_fraction(value), bound * _fraction(opt))
            rows.append(row)
    rows.sort(key=lambda r: (r.instance_id, r.algorithm))
    return ExperimentReport(rows)


def ratio(value, opt):
    if opt == 0:
        return Fraction(1) if value == 0 else float("inf")
    if is_exact(value) and is_exact(opt):
        return Fraction(value) / Fraction(opt)
    return value / opt
