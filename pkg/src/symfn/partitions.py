"""Integer partitions: the index set for every basis in this library.

A partition is a weakly decreasing tuple of positive integers.  Zero parts
are never stored; the empty partition is the unique partition of weight 0.
Partitions are immutable values with structural equality, so they key all
the sparse maps used elsewhere.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        prev = None
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if prev is not None and p > prev:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
            prev = p
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return sum(1 for p in self if p == i)

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> multiplicity (only values that occur)."""
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def text(self) -> str:
        """Comma-separated textual form; the empty partition is ''."""
        return ",".join(str(p) for p in self)

    @classmethod
    def from_text(cls, s: str) -> "Partition":
        """Parse '3,2,1' (or '' for the empty partition); zero parts are dropped."""
        s = s.strip()
        if not s:
            return EMPTY
        try:
            values = [int(tok) for tok in s.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition string {s!r}") from None
        if any(v < 0 for v in values):
            raise ValueError(f"malformed partition string {s!r}: negative part")
        values = [v for v in values if v > 0]
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"malformed partition string {s!r}: parts not weakly decreasing")
        return cls(values)

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"Partition({self.text()})"


EMPTY = Partition()


def sort_to_partition(values: Iterable[int]) -> Partition:
    """Rearrange non-negative integers into a partition, dropping zeros."""
    vals = list(values)
    if any(v < 0 for v in vals):
        raise ValueError("values must be non-negative")
    return Partition(sorted((v for v in vals if v > 0), reverse=True))


def z_lambda(lam: Partition) -> int:
    """Centralizer size: product over part values i of i^m_i * m_i!."""
    out = 1
    for i, m in lam.multiplicities().items():
        out *= i**m
        for k in range(2, m + 1):
            out *= k
    return out


def dominance_geq(lam: Partition, mu: Partition) -> bool:
    """Dominance order: every prefix sum of lam is >= the one of mu.

    Only partitions of equal weight are comparable.
    """
    if lam.weight != mu.weight:
        raise ValueError("incomparable weights")
    acc = 0
    for i in range(max(len(lam), len(mu))):
        acc += (lam[i] if i < len(lam) else 0) - (mu[i] if i < len(mu) else 0)
        if acc < 0:
            return False
    return True


def dominance_gt(lam: Partition, mu: Partition) -> bool:
    return lam != mu and dominance_geq(lam, mu)


def union(lam: Partition, mu: Partition) -> Partition:
    """Multiset union: multiplicities add."""
    return Partition(sorted(tuple(lam) + tuple(mu), reverse=True))


def lambda_plus(lam: Partition) -> Partition:
    """Move one unit from the last part onto the previous one and re-sort.

    The result strictly dominates the input.
    """
    if len(lam) < 2:
        raise ValueError("lambda_plus needs at least two parts")
    s = len(lam)
    return sort_to_partition(lam[: s - 2] + (lam[s - 2] + 1, lam[s - 1] - 1))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order.

    The order is total, deterministic, and refines the dominance order
    downward: the all-in-one-row partition comes first, the all-ones
    partition last.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    return tuple(Partition(p) for p in _descending_parts(n, n))


def _descending_parts(n: int, maxpart: int):
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in _descending_parts(n - k, k):
            yield (k,) + rest


# Kept as an alias for the operation name used by the command-line front end.
enumerate_partitions = partitions_of


@lru_cache(maxsize=None)
def partition_index(n: int) -> dict[Partition, int]:
    """Position of each partition of n inside partitions_of(n)."""
    return {lam: i for i, lam in enumerate(partitions_of(n))}
