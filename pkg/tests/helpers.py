"""Small fixtures shared by the test modules."""
from submcp import GraphCoverage, GraphCut, WeightedGraph

a, b, c, d = 0, 1, 2, 3


def unit_triangle():
    return GraphCut(WeightedGraph(3, [(a, b), (b, c), (a, c)]))


def unit_path(n=3):
    return WeightedGraph(n, [(i, i + 1) for i in range(n - 1)])


def path_cut(n=3):
    return GraphCut(unit_path(n))


def path_coverage(n=3):
    return GraphCoverage(unit_path(n))


def set_partitions(items):
    """All set partitions of ``items`` as lists of lists."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p
