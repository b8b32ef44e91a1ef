"""Matroids given by independence oracles.

All matroids live on ``range(n)`` and answer ``indep(mask)`` on bitmasks.
Derived matroids (truncation, contraction, dual, tree-edge) wrap another
oracle and never copy its independence family.
"""
from __future__ import annotations

import threading
from collections import deque
from itertools import combinations
from typing import Optional, Sequence

from .core import (UnionFind, as_number, components, from_mask, full_mask, is_spanning_tree,
                   iter_bits, popcount, to_mask, Partition)
from .errors import InvalidArgumentError, ValidationError

EXPLICIT_VALIDATE_N = 10


class Matroid:
    kind = "abstract"

    def __init__(self, n: int):
        if n < 0:
            raise InvalidArgumentError("negative ground size")
        self.n = n
        self._rank: Optional[int] = None

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, rank={self.full_rank})"

    def indep(self, mask: int) -> bool:
        raise NotImplementedError

    def is_independent(self, subset) -> bool:
        return self.indep(to_mask(subset, self.n))

    def rank_mask(self, mask: int) -> int:
        cur = 0
        for e in iter_bits(mask):
            if self.indep(cur | (1 << e)):
                cur |= 1 << e
        return popcount(cur)

    def rank(self, subset=None) -> int:
        if subset is None:
            return self.full_rank
        return self.rank_mask(to_mask(subset, self.n))

    @property
    def full_rank(self) -> int:
        if self._rank is None:
            self._rank = self.rank_mask(full_mask(self.n))
        return self._rank

    @property
    def ground(self) -> int:
        return full_mask(self.n)


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, n: int, r: int):
        if not 0 <= r <= n:
            raise InvalidArgumentError(f"uniform rank {r} outside 0..{n}")
        super().__init__(n)
        self.r = r
        self._rank = r

    def indep(self, mask):
        return popcount(mask) <= self.r


class PartitionMatroid(Matroid):
    """At most ``capacities[i]`` elements from ``classes[i]``.

    Classes must be disjoint; elements outside every class are loops.
    """

    kind = "partition"

    def __init__(self, n: int, classes, capacities=None):
        super().__init__(n)
        self.classes = tuple(tuple(sorted(set(c))) for c in classes)
        caps = [1] * len(self.classes) if capacities is None else list(capacities)
        if len(caps) != len(self.classes):
            raise InvalidArgumentError("one capacity per class required")
        if any(int(c) != c or c < 0 for c in caps):
            raise InvalidArgumentError("capacities must be nonnegative integers")
        self.capacities = tuple(int(c) for c in caps)
        seen = 0
        masks = []
        for c in self.classes:
            m = to_mask(c, n)
            if m & seen:
                raise InvalidArgumentError("partition matroid classes overlap")
            seen |= m
            masks.append(m)
        self.masks = tuple(masks)
        self.loops = full_mask(n) & ~seen

    def indep(self, mask):
        if mask & self.loops:
            return False
        for m, c in zip(self.masks, self.capacities):
            if popcount(mask & m) > c:
                return False
        return True


def _is_laminar(masks) -> bool:
    for a, b in combinations(masks, 2):
        if a & b and (a & b) != a and (a & b) != b:
            return False
    return True


class LaminarMatroid(Matroid):
    kind = "laminar"

    def __init__(self, n: int, family, bounds, cap: Optional[int] = None):
        super().__init__(n)
        self.family = tuple(tuple(sorted(set(s))) for s in family)
        self.bounds = tuple(int(g) for g in bounds)
        if len(self.bounds) != len(self.family):
            raise InvalidArgumentError("one bound per laminar set required")
        if any(g < 0 for g in self.bounds):
            raise InvalidArgumentError("laminar bounds must be nonnegative")
        if cap is not None and cap < 0:
            raise InvalidArgumentError("global cap must be nonnegative")
        self.cap = cap
        self.masks = tuple(to_mask(s, n) for s in self.family)
        if not _is_laminar(self.masks):
            raise InvalidArgumentError("family is not laminar")

    def indep(self, mask):
        if self.cap is not None and popcount(mask) > self.cap:
            return False
        return all(popcount(mask & m) <= g for m, g in zip(self.masks, self.bounds))


class GraphicMatroid(Matroid):
    """Cycle matroid; element ``i`` is ``edges[i]``."""

    kind = "graphic"

    def __init__(self, num_vertices: int, edges):
        self.num_vertices = num_vertices
        self.edges = tuple((int(e[0]), int(e[1])) for e in edges)
        for u, v in self.edges:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise InvalidArgumentError(f"edge ({u}, {v}) out of range")
        super().__init__(len(self.edges))

    def indep(self, mask):
        uf = UnionFind(self.num_vertices)
        for i in iter_bits(mask):
            u, v = self.edges[i]
            if not uf.union(u, v):
                return False
        return True


class PavingMatroid(Matroid):
    """Rank-``r`` paving matroid: bases are the r-sets inside no hyperedge."""

    kind = "paving"

    def __init__(self, n: int, r: int, hyperedges):
        super().__init__(n)
        if n < r or r < 0:
            raise InvalidArgumentError(f"paving rank {r} needs 0 <= r <= n = {n}")
        self.r = r
        self.hyperedges = tuple(tuple(sorted(set(h))) for h in hyperedges)
        self.masks = tuple(to_mask(h, n) for h in self.hyperedges)
        for i, h in enumerate(self.masks):
            if h == full_mask(n):
                raise ValidationError("hyperedge must be a proper subset", f"hyperedges[{i}]")
            if popcount(h) < r:
                raise ValidationError(f"hyperedge smaller than rank {r}", f"hyperedges[{i}]")
        for (i, a), (j, b) in combinations(enumerate(self.masks), 2):
            if popcount(a & b) > r - 2:
                raise ValidationError(
                    f"|H_{i} & H_{j}| = {popcount(a & b)} exceeds r - 2 = {r - 2}",
                    f"hyperedges[{j}]")

    def indep(self, mask):
        c = popcount(mask)
        if c < self.r:
            return True
        if c > self.r:
            return False
        return not any(mask & ~h == 0 for h in self.masks)


class ExplicitBasesMatroid(Matroid):
    kind = "explicit-bases"

    def __init__(self, n: int, bases, validate: Optional[bool] = None):
        super().__init__(n)
        self.bases = tuple(sorted({to_mask(b, n) for b in bases}))
        if not self.bases:
            raise InvalidArgumentError("a matroid needs at least one basis")
        sizes = {popcount(b) for b in self.bases}
        if len(sizes) != 1:
            raise InvalidArgumentError("bases differ in size")
        self._rank = sizes.pop()
        if validate is None:
            validate = n <= EXPLICIT_VALIDATE_N
        self.trusted = not validate
        if validate:
            bad = _basis_exchange_violation(self.bases)
            if bad is not None:
                raise InvalidArgumentError(f"basis exchange fails for {bad}")

    def indep(self, mask):
        return any(mask & ~b == 0 for b in self.bases)


def _basis_exchange_violation(bases):
    family = set(bases)
    for b1 in bases:
        for b2 in bases:
            for x in iter_bits(b1 & ~b2):
                if not any((b1 & ~(1 << x)) | (1 << y) in family for y in iter_bits(b2 & ~b1)):
                    return (sorted(iter_bits(b1)), sorted(iter_bits(b2)), x)
    return None


class Truncation(Matroid):
    kind = "truncation"

    def __init__(self, inner: Matroid, k: int):
        if not 0 <= k <= inner.full_rank:
            raise InvalidArgumentError(f"truncation level {k} outside 0..{inner.full_rank}")
        super().__init__(inner.n)
        self.inner = inner
        self.k = k
        self._rank = k

    def indep(self, mask):
        return popcount(mask) <= self.k and self.inner.indep(mask)


class Contraction(Matroid):
    """``inner / Z`` on the elements outside ``Z``, renumbered in ascending order.

    ``kept[i]`` is the inner element represented by element ``i``.
    """

    kind = "contraction"

    def __init__(self, inner: Matroid, contracted):
        zmask = to_mask(contracted, inner.n)
        self.inner = inner
        self.contracted = tuple(iter_bits(zmask))
        self.kept = tuple(e for e in range(inner.n) if not zmask >> e & 1)
        super().__init__(len(self.kept))
        base = 0
        for e in iter_bits(zmask):
            if inner.indep(base | (1 << e)):
                base |= 1 << e
        self.base = base

    def lift(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= 1 << self.kept[i]
        return out

    def indep(self, mask):
        return self.inner.indep(self.lift(mask) | self.base)


class Dual(Matroid):
    kind = "dual"

    def __init__(self, inner: Matroid):
        super().__init__(inner.n)
        self.inner = inner

    def indep(self, mask):
        return self.inner.rank_mask(self.inner.ground & ~mask) == self.inner.full_rank

    def rank_mask(self, mask):
        inner = self.inner
        return popcount(mask) + inner.rank_mask(inner.ground & ~mask) - inner.full_rank


class TreeEdgeMatroid(Matroid):
    """Edge set X of ``tree`` is independent iff the components of ``tree - X``
    have a transversal independent in ``inner``.  Element ``i`` is tree edge ``i``.
    """

    kind = "tree-edge"

    def __init__(self, tree, inner: Matroid):
        if tree.n != inner.n:
            raise InvalidArgumentError("tree and inner matroid have different ground sets")
        if not is_spanning_tree(tree.n, tree.edges):
            raise InvalidArgumentError("graph is not a spanning tree")
        super().__init__(len(tree.edges))
        self.tree = tree
        self.inner = inner
        self._cache: dict = {}
        self._lock = threading.Lock()

    def components(self, mask: int) -> list:
        return components(self.tree.n, self.tree.edges, iter_bits(mask))

    def transversal(self, mask: int) -> Optional[int]:
        """Independent transversal (mask over the inner ground set) or None."""
        with self._lock:
            if mask in self._cache:
                return self._cache[mask]
        comps = self.components(mask)
        t = None
        if len(comps) <= self.inner.full_rank:
            t = independent_transversal(Truncation(self.inner, len(comps)), comps)
        with self._lock:
            self._cache[mask] = t
        return t

    def indep(self, mask):
        return self.transversal(mask) is not None


# -- module-level operations ----------------------------------------------

def is_independent(M: Matroid, subset) -> bool:
    return M.is_independent(subset)


def rank(M: Matroid, subset=None) -> int:
    return M.rank(subset)


def truncate(M: Matroid, k: int) -> Truncation:
    return Truncation(M, k)


def contract(M: Matroid, Z) -> Contraction:
    return Contraction(M, Z)


def dual(M: Matroid) -> Dual:
    return Dual(M)


def min_weight_basis(M: Matroid, weights: Sequence):
    """Greedy basis of minimum total weight; ties broken by element index."""
    if len(weights) != M.n:
        raise InvalidArgumentError("one weight per element required")
    ws = [as_number(w) for w in weights]
    cur = 0
    for e in sorted(range(M.n), key=lambda i: (ws[i], i)):
        if M.indep(cur | (1 << e)):
            cur |= 1 << e
    return from_mask(cur), as_number(sum(ws[e] for e in iter_bits(cur)))


def _same_ground(M1, M2):
    if M1.n != M2.n:
        raise InvalidArgumentError(f"ground sets differ ({M1.n} vs {M2.n})")


def intersect_mask(M1: Matroid, M2: Matroid) -> int:
    """Maximum common independent set by shortest augmenting paths."""
    _same_ground(M1, M2)
    n = M1.n
    I = 0
    while True:
        outside = [y for y in range(n) if not I >> y & 1]
        inside = list(iter_bits(I))
        src = [y for y in outside if M1.indep(I | (1 << y))]
        if not src:
            return I
        sink = {y for y in outside if M2.indep(I | (1 << y))}
        prev = dict.fromkeys(src)
        queue = deque(src)
        end = None
        while queue:
            a = queue.popleft()
            if not I >> a & 1:
                if a in sink:
                    end = a
                    break
                base = I | (1 << a)
                for x in inside:
                    if x not in prev and M2.indep(base & ~(1 << x)):
                        prev[x] = a
                        queue.append(x)
            else:
                base = I & ~(1 << a)
                for y in outside:
                    if y not in prev and M1.indep(base | (1 << y)):
                        prev[y] = a
                        queue.append(y)
        if end is None:
            return I
        v = end
        while v is not None:
            I ^= 1 << v
            v = prev[v]


def matroid_intersection_max(M1: Matroid, M2: Matroid) -> frozenset:
    return from_mask(intersect_mask(M1, M2))


def weighted_intersection_levels(M1: Matroid, M2: Matroid, weights: Sequence) -> list:
    """Max-weight common independent sets of every size 0..p, as masks.

    Each augmentation follows a minimum-length path (lengths: +w inside the
    current set, -w outside), fewest arcs among those.
    """
    _same_ground(M1, M2)
    n = M1.n
    if len(weights) != n:
        raise InvalidArgumentError("one weight per element required")
    w = [as_number(x) for x in weights]
    if any(x < 0 for x in w):
        raise InvalidArgumentError("weights must be nonnegative")
    I = 0
    levels = [0]
    while True:
        outside = [y for y in range(n) if not I >> y & 1]
        inside = list(iter_bits(I))
        src = [y for y in outside if M1.indep(I | (1 << y))]
        sink = [y for y in outside if M2.indep(I | (1 << y))]
        if not src or not sink:
            break
        arcs = {v: [] for v in range(n)}
        for x in inside:
            base = I & ~(1 << x)
            for y in outside:
                z = base | (1 << y)
                if M1.indep(z):
                    arcs[x].append(y)
                if M2.indep(z):
                    arcs[y].append(x)
        cost = [w[v] if I >> v & 1 else -w[v] for v in range(n)]
        dist = {y: (cost[y], 0) for y in src}
        prev = dict.fromkeys(src)
        for _ in range(n):
            changed = False
            for a in sorted(dist):
                da = dist[a]
                for b in arcs[a]:
                    cand = (da[0] + cost[b], da[1] + 1)
                    if b not in dist or cand < dist[b]:
                        dist[b] = cand
                        prev[b] = a
                        changed = True
            if not changed:
                break
        reach = [y for y in sink if y in dist]
        if not reach:
            break
        end = min(reach, key=lambda y: (dist[y], y))
        v = end
        seen = set()
        while v is not None and v not in seen:
            seen.add(v)
            I ^= 1 << v
            v = prev[v]
        levels.append(I)
    return levels


def max_weight_common_independent(M1: Matroid, M2: Matroid, weights: Sequence):
    """Heaviest set among the maximum-cardinality common independent sets."""
    I = weighted_intersection_levels(M1, M2, weights)[-1]
    return from_mask(I), as_number(sum(as_number(weights[e]) for e in iter_bits(I)))


def independent_transversal(M: Matroid, block_masks: Sequence[int]) -> Optional[int]:
    """Mask of an M-independent set meeting every block once, or None.

    Blocks must be disjoint; elements outside every block are not used.
    """
    P = PartitionMatroid(M.n, [list(iter_bits(b)) for b in block_masks])
    I = intersect_mask(P, M)
    return I if popcount(I) == len(block_masks) else None


def has_transversal_basis(M: Matroid, partition) -> Optional[frozenset]:
    """A basis of M with exactly one element in every block, if any."""
    if not isinstance(partition, Partition):
        partition = Partition(tuple(partition))
    partition.validate(M.n)
    k = len(partition.blocks)
    if k != M.full_rank:
        return None
    masks = [to_mask(b, M.n) for b in partition.blocks]
    t = independent_transversal(Truncation(M, k), masks)
    return None if t is None else from_mask(t)


def tree_edge_independent(T: TreeEdgeMatroid, edges) -> bool:
    return T.is_independent(edges)


# -- exhaustive helpers ----------------------------------------------------

def independent_sets(M: Matroid, size: Optional[int] = None) -> list:
    """All independent masks (of the given size), ascending."""
    if size is None:
        return [m for m in range(1 << M.n) if M.indep(m)]
    out = []
    for c in combinations(range(M.n), size):
        m = 0
        for e in c:
            m |= 1 << e
        if M.indep(m):
            out.append(m)
    return sorted(out)


def bases(M: Matroid) -> list:
    return independent_sets(M, M.full_rank)


def check_axioms(M: Matroid) -> Optional[str]:
    """Exhaustively test (I1)-(I3); returns a description of the first failure."""
    fam = [m for m in range(1 << M.n) if M.indep(m)]
    famset = set(fam)
    if 0 not in famset:
        return "I1: empty set is dependent"
    for m in fam:
        for e in iter_bits(m):
            if m & ~(1 << e) not in famset:
                return f"I2: {sorted(iter_bits(m))} independent but drops {e}"
    for x in fam:
        cx = popcount(x)
        for y in fam:
            if popcount(y) > cx and not any(x | (1 << e) in famset for e in iter_bits(y & ~x)):
                return f"I3: cannot extend {sorted(iter_bits(x))} from {sorted(iter_bits(y))}"
    return None


def brute_max_common(M1: Matroid, M2: Matroid) -> int:
    best = 0
    for m in range(1 << M1.n):
        if popcount(m) > best and M1.indep(m) and M2.indep(m):
            best = popcount(m)
    return best


def brute_weighted_common(M1: Matroid, M2: Matroid, weights) -> tuple:
    """(max cardinality, max weight at that cardinality, max weight overall)."""
    card, wcard, wall = 0, 0, 0
    for m in range(1 << M1.n):
        if M1.indep(m) and M2.indep(m):
            c = popcount(m)
            wt = sum(weights[e] for e in iter_bits(m))
            wall = max(wall, wt)
            if c > card:
                card, wcard = c, wt
            elif c == card:
                wcard = max(wcard, wt)
    return card, wcard, wall


__all__ = [
    "Matroid", "UniformMatroid", "PartitionMatroid", "LaminarMatroid", "GraphicMatroid",
    "PavingMatroid", "ExplicitBasesMatroid", "Truncation", "Contraction", "Dual",
    "TreeEdgeMatroid", "is_independent", "rank", "truncate", "contract", "dual",
    "min_weight_basis", "matroid_intersection_max", "max_weight_common_independent",
    "weighted_intersection_levels", "independent_transversal", "has_transversal_basis",
    "tree_edge_independent", "independent_sets", "bases", "check_axioms",
    "brute_max_common", "brute_weighted_common",
]
