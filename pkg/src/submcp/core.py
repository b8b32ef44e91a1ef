"""Ground sets, bitmask helpers, partitions and exact-number utilities.

Subsets are handled internally as Python ``int`` bitmasks (bit ``i`` set means
element ``i`` is present).  Public functions accept any iterable of element
indices and return ``frozenset`` objects.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Sequence

from .errors import InvalidArgumentError, InvalidPartitionError, InvalidSubsetError

EPS = 1e-9


def to_mask(subset, n: int) -> int:
    """Convert an iterable of element indices (or an int mask) into a bitmask."""
    if isinstance(subset, int):
        if subset < 0 or subset >> n:
            raise InvalidSubsetError(f"mask {subset:#x} has elements outside 0..{n - 1}")
        return subset
    mask = 0
    for e in subset:
        if not isinstance(e, int) or not 0 <= e < n:
            raise InvalidSubsetError(f"element {e!r} not in ground set of size {n}")
        mask |= 1 << e
    return mask


def from_mask(mask: int) -> frozenset:
    return frozenset(iter_bits(mask))


def iter_bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def full_mask(n: int) -> int:
    return (1 << n) - 1


# -- numbers ---------------------------------------------------------------

def as_number(x):
    """Normalise a weight: ints stay ints, rationals become Fraction, else float."""
    if isinstance(x, bool):
        raise InvalidArgumentError("boolean is not a weight")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return as_number(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return as_number(Fraction(x))
    return float(x)


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def leq(a, b, exact: Optional[bool] = None) -> bool:
    """``a <= b`` exactly for rationals, within EPS otherwise."""
    if exact is None:
        exact = is_exact(a) and is_exact(b)
    return a <= b if exact else a <= b + EPS


# -- ground set ------------------------------------------------------------

@dataclass(frozen=True)
class GroundSet:
    n: int
    labels: Optional[tuple] = None

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgumentError("ground set must be nonempty")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise InvalidArgumentError("label count differs from ground size")
            if len(set(labels)) != self.n:
                raise InvalidArgumentError("labels must be unique")
            object.__setattr__(self, "labels", labels)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def index(self, label) -> int:
        if self.labels is None:
            return int(label)
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise InvalidSubsetError(f"unknown element label {label!r}") from None


# -- partitions ------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    """Ordered disjoint nonempty blocks covering ``range(n)``.

    Blocks are kept in canonical order (by smallest element).  ``witness`` is a
    transversal basis of the constraint matroid; ``witness2`` the basis of the
    second matroid in the two-matroid setting.
    """

    blocks: tuple
    witness: Optional[frozenset] = None
    witness2: Optional[frozenset] = None

    def __post_init__(self):
        blocks = tuple(sorted((frozenset(b) for b in self.blocks), key=_block_key))
        object.__setattr__(self, "blocks", blocks)
        for name in ("witness", "witness2"):
            w = getattr(self, name)
            if w is not None:
                object.__setattr__(self, name, frozenset(w))

    @classmethod
    def from_masks(cls, masks: Iterable[int], witness=None, witness2=None) -> "Partition":
        return cls(tuple(from_mask(m) for m in masks), witness, witness2)

    @classmethod
    def from_labels(cls, labels: Sequence[int], **kw) -> "Partition":
        groups: dict = {}
        for e, b in enumerate(labels):
            groups.setdefault(int(b), set()).add(e)
        return cls(tuple(groups.values()), **kw)

    @property
    def masks(self) -> list:
        return [to_mask(b, 1 + max(b)) for b in self.blocks]

    def __len__(self):
        return len(self.blocks)

    def labels(self, n: int) -> list:
        out = [-1] * n
        for i, b in enumerate(self.blocks):
            for e in b:
                out[e] = i
        return out

    def validate(self, n: int) -> None:
        seen = 0
        for b in self.blocks:
            if not b:
                raise InvalidPartitionError("empty block")
            m = to_mask(b, n)
            if m & seen:
                raise InvalidPartitionError("blocks are not disjoint")
            seen |= m
        if seen != full_mask(n):
            raise InvalidPartitionError("blocks do not cover the ground set")

    def check_witness(self, matroid, witness=None) -> bool:
        """True if ``witness`` is independent and hits every block exactly once."""
        w = self.witness if witness is None else witness
        if w is None or len(w) != len(self.blocks):
            return False
        if any(len(b & w) != 1 for b in self.blocks):
            return False
        return matroid.is_independent(w)


def _block_key(b):
    return (min(b) if b else -1, sorted(b))


# -- forests ---------------------------------------------------------------

class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            ra, rb = rb, ra
        self.parent[ra] = rb
        return True


def components(n: int, edges: Sequence[tuple], removed: Iterable[int] = ()) -> list:
    """Vertex masks of the connected components of ``(range(n), edges - removed)``.

    ``edges`` is a sequence of ``(u, v, ...)``; ``removed`` holds edge indices.
    Components are ordered by smallest vertex.
    """
    skip = set(removed)
    uf = UnionFind(n)
    for i, e in enumerate(edges):
        if i not in skip:
            uf.union(e[0], e[1])
    comp: dict = {}
    for v in range(n):
        r = uf.find(v)
        comp[r] = comp.get(r, 0) | (1 << v)
    return sorted(comp.values(), key=lowest)


def is_spanning_tree(n: int, edges: Sequence[tuple]) -> bool:
    if len(edges) != n - 1:
        return False
    uf = UnionFind(n)
    return all(uf.union(e[0], e[1]) for e in edges)
