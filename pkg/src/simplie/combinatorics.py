"""Shuffle enumeration and the two sign functions of the bracket calculus.

Two coordinate systems coexist: shuffles of ``{1..n}`` (blocks written
sigma', sigma'') and multi-index partitions of ``{0..n-1}`` (blocks I, J,
related by i = sigma - 1).  Both enumerators are exposed; conversion is the
order-preserving shift.

Signs:

* ``shuffle_sign`` (sgn) is the ungraded sign of the permutation sorting the
  block concatenation, extended to overlapping sets by discarding the common
  part.
* ``koszul_sign`` (gsn) weighs each crossing of indices i, j by
  ``(-1)**(p_i * p_j + 1)`` for a fixed degree vector ``(p_i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import DomainError

__all__ = [
    "IndexSet",
    "ShufflePartition",
    "DegreeVector",
    "enumerate_shuffles",
    "enumerate_restricted_shuffles",
    "enumerate_multi_index_shuffles",
    "enumerate_restricted_multi_index_shuffles",
    "shuffle_sign",
    "multi_shuffle_sign",
    "koszul_sign",
    "hat_shift",
]


@dataclass(frozen=True)
class IndexSet:
    """A strictly ascending tuple of non-negative integers."""

    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", elems)
        if any(e < 0 for e in elems):
            raise DomainError(f"index sets hold non-negative integers, got {elems}")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise DomainError(f"index set must be strictly ascending, got {elems}")

    @classmethod
    def of(cls, elements: Iterable[int]) -> "IndexSet":
        return cls(tuple(sorted(set(int(e) for e in elements))))

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: int) -> bool:
        return item in self.elements

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.elements)

    def minus(self, other: "IndexSet") -> "IndexSet":
        keep = set(other.elements)
        return IndexSet(tuple(e for e in self.elements if e not in keep))

    def union(self, other: "IndexSet") -> "IndexSet":
        return IndexSet.of(self.elements + other.elements)

    def isdisjoint(self, other: "IndexSet") -> bool:
        return set(self.elements).isdisjoint(other.elements)


@dataclass(frozen=True)
class ShufflePartition:
    """An ordered tuple of pairwise-disjoint ascending blocks.

    ``ground`` is the union of the blocks.  Signs are computed lazily and
    cached on the instance.
    """

    blocks: tuple[IndexSet, ...]
    _sign_cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        seen: set[int] = set()
        for block in self.blocks:
            for e in block:
                if e in seen:
                    raise DomainError(f"blocks are not pairwise disjoint at index {e}")
                seen.add(e)

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> "ShufflePartition":
        return cls(tuple(IndexSet.of(b) for b in blocks))

    @property
    def ground(self) -> IndexSet:
        if "ground" not in self._sign_cache:
            merged: list[int] = []
            for block in self.blocks:
                merged.extend(block.elements)
            self._sign_cache["ground"] = IndexSet(tuple(sorted(merged)))
        return self._sign_cache["ground"]

    def sign(self) -> int:
        """Ungraded sign of the block concatenation (sgn)."""
        if "sgn" not in self._sign_cache:
            self._sign_cache["sgn"] = multi_shuffle_sign(*self.blocks)
        return self._sign_cache["sgn"]

    def koszul(self, degrees: "DegreeVector") -> int:
        """Graded sign of the block concatenation (gsn) for ``degrees``."""
        key = ("gsn", degrees.degrees)
        if key not in self._sign_cache:
            self._sign_cache[key] = koszul_sign(degrees, self)
        return self._sign_cache[key]

    def cross_pairs(self) -> tuple[tuple[int, int], ...]:
        """Inverted cross-block pairs (a, b): a before b, a > b.  Cached."""
        if "pairs" not in self._sign_cache:
            self._sign_cache["pairs"] = tuple(_cross_inversions(self.blocks))
        return self._sign_cache["pairs"]

    def to_multi_index(self) -> "ShufflePartition":
        """Shift a ``{1..n}`` partition down to ``{0..n-1}`` coordinates."""
        return ShufflePartition(
            tuple(IndexSet(tuple(e - 1 for e in b)) for b in self.blocks)
        )

    def __str__(self) -> str:
        return "(" + " | ".join(str(b) for b in self.blocks) + ")"


@dataclass(frozen=True)
class DegreeVector:
    """Positive reduced degrees ``p_i``; the i-th sphere is ``S^(p_i + 1)``."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degs)
        if any(d < 1 for d in degs):
            raise DomainError(f"reduced degrees must be >= 1, got {degs}")

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i: int) -> int:
        return self.degrees[i]


def _check_shuffle_args(n: int, k: int) -> None:
    if n < 0:
        raise DomainError(f"shuffle size n must be >= 0, got {n}")
    if not 0 <= k <= n:
        raise DomainError(f"shuffle parameter k must lie in [0, {n}], got {k}")


def enumerate_shuffles(n: int, k: int) -> list[ShufflePartition]:
    """All (k, n-k)-shuffles of {1..n}, lexicographic in the first block."""
    _check_shuffle_args(n, k)
    full = range(1, n + 1)
    out = []
    for first in itertools.combinations(full, k):
        second = tuple(e for e in full if e not in first)
        out.append(ShufflePartition((IndexSet(first), IndexSet(second))))
    return out


def enumerate_restricted_shuffles(n: int, k: int) -> list[ShufflePartition]:
    """(k, n-k)-shuffles of {1..n}; when n = 2k only those with 1 in the first block."""
    shuffles = enumerate_shuffles(n, k)
    if n != 2 * k:
        return shuffles
    return [s for s in shuffles if 1 in s.blocks[0]]


def enumerate_multi_index_shuffles(n: int, k: int) -> list[ShufflePartition]:
    """The same shuffles in multi-index coordinates, partitioning {0..n-1}."""
    return [s.to_multi_index() for s in enumerate_shuffles(n, k)]


def enumerate_restricted_multi_index_shuffles(n: int, k: int) -> list[ShufflePartition]:
    """Multi-index form of the restricted shuffles (0 in the first block when n = 2k)."""
    return [s.to_multi_index() for s in enumerate_restricted_shuffles(n, k)]


def _cross_inversions(blocks: Sequence[IndexSet]) -> Iterator[tuple[int, int]]:
    """Pairs (a, b), a in an earlier block, b in a later one, with a > b."""
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for a in blocks[i]:
                for b in blocks[j]:
                    if a > b:
                        yield a, b


def _bitmask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def _cross_inversion_count(earlier: int, later: int) -> int:
    """Number of pairs a in earlier, b in later with a > b (bitmask blocks)."""
    count = 0
    m = earlier
    while m:
        low = m & -m
        count += (later & (low - 1)).bit_count()
        m ^= low
    return count


def shuffle_sign(I: IndexSet | Iterable[int], J: IndexSet | Iterable[int]) -> int:
    """sgn<I, J>: overlap is discarded, then the sorting sign of I'.J' is taken."""
    mi = _bitmask(I.elements if isinstance(I, IndexSet) else I)
    mj = _bitmask(J.elements if isinstance(J, IndexSet) else J)
    common = mi & mj
    inversions = _cross_inversion_count(mi ^ common, mj ^ common)
    return -1 if inversions % 2 else 1


def multi_shuffle_sign(*blocks: IndexSet | Iterable[int]) -> int:
    """Sorting sign of the concatenation of pairwise-disjoint ascending blocks."""
    masks = [
        _bitmask(b.elements if isinstance(b, IndexSet) else b) for b in blocks
    ]
    seen = 0
    for mask in masks:
        if mask & seen:
            raise DomainError("blocks are not pairwise disjoint")
        seen |= mask
    inversions = 0
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            inversions += _cross_inversion_count(masks[i], masks[j])
    return -1 if inversions % 2 else 1


def koszul_sign(
    degrees: DegreeVector, blocks: ShufflePartition, base: int | None = None
) -> int:
    """gsn of the block concatenation: each crossing (i, j) weighs (-1)**(p_i p_j + 1).

    Blocks hold pairwise-disjoint indices into ``degrees``, either 1-based
    (positions 1..n, the shuffle convention) or 0-based (multi-indices).
    When ``base`` is not given it is inferred: a ground containing 0 is
    0-based, anything else 1-based.
    """
    n = len(degrees)
    ground = blocks.ground.elements
    if base is None:
        base = 0 if (ground and ground[0] == 0) else 1
    if base not in (0, 1):
        raise DomainError(f"base must be 0 or 1, got {base}")
    if any(not base <= e < n + base for e in ground):
        raise DomainError(
            f"block indices {ground} escape the degree range ({base}..{n - 1 + base})"
        )
    degs = degrees.degrees
    pairs = blocks.cross_pairs()
    exponent = len(pairs)
    for a, b in pairs:
        exponent += degs[a - base] * degs[b - base]
    return -1 if exponent % 2 else 1


def hat_shift(K: IndexSet | Iterable[int], prepend_zero: bool = False) -> IndexSet:
    """Add one to every element; optionally adjoin 0 in front."""
    K = K if isinstance(K, IndexSet) else IndexSet.of(K)
    shifted = tuple(e + 1 for e in K.elements)
    if prepend_zero:
        return IndexSet((0,) + shifted)
    return IndexSet(shifted)
