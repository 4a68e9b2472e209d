"""Integer partitions and the statistics attached to them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

MAX_SIZE = 30


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Doubles as a conjugacy-class label and an irreducible-representation label
    of the symmetric group.  The empty partition is allowed.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise ValueError(f"partition parts must be positive integers: {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Build from an unsorted multiset of parts."""
        return cls(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,1,1"``; the parts must already be in decreasing order."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(t) for t in text.split(",")]
        except ValueError:
            raise ValueError(f"invalid partition syntax: {text!r}") from None
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self):
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def hook_lengths(self) -> list[int]:
        conj = self.conjugate()
        return [self[i] - j + conj[j] - i - 1 for i, j in self.cells()]

    def remove(self, *parts: int) -> "Partition":
        rest = list(self)
        for p in parts:
            rest.remove(p)
        return Partition(rest)

    def add(self, *parts: int) -> "Partition":
        return Partition.from_parts(list(self) + list(parts))

    def __repr__(self):
        return f"Partition({list(self)})"


EMPTY = Partition()


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of ``d`` in reverse lexicographic order.

    >>> enumerate_partitions(3)
    [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    if d > MAX_SIZE:
        raise ValueError(f"partitions of {d} exceed the size cap {MAX_SIZE}")
    return list(_partitions(d, d))


@lru_cache(maxsize=None)
def _partitions(d: int, largest: int) -> tuple[Partition, ...]:
    if d == 0:
        return (EMPTY,)
    out = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def partitions_up_to(d: int) -> list[Partition]:
    """Nonempty partitions with size <= d, by size then reverse-lex."""
    return [p for k in range(1, d + 1) for p in enumerate_partitions(k)]


def z(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``mu``."""
    return prod(factorial(m) * j ** m for j, m in Counter(mu).items())


def kappa(mu: Partition) -> int:
    return sum(m * m - 2 * i * m for i, m in enumerate(mu, 1)) + sum(mu)


def n_stat(mu: Partition) -> int:
    """``n(mu) = sum_i (i - 1) mu_i``."""
    return sum(i * m for i, m in enumerate(mu))


def aut_order(mu: Partition) -> int:
    return prod(factorial(m) for m in Counter(mu).values())


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // z(mu)


@dataclass(frozen=True)
class PartitionStats:
    z: int
    kappa: int
    n: int
    aut_order: int
    hooks: tuple[int, ...]
    conjugate: Partition
    multiplicities: dict


def stats(mu: Partition) -> PartitionStats:
    mu = Partition(mu)
    return PartitionStats(
        z=z(mu),
        kappa=kappa(mu),
        n=n_stat(mu),
        aut_order=aut_order(mu),
        hooks=tuple(sorted(mu.hook_lengths(), reverse=True)),
        conjugate=mu.conjugate(),
        multiplicities=mu.multiplicities(),
    )


def hook_sum_identity_check(rho: Partition) -> bool:
    """Check the two hook-sum identities for ``rho``.

    * ``sum h = n(rho) + n(rho') + |rho|``
    * ``sum h / 2 - n(rho) = kappa/4 + |rho|/2``
    """
    rho = Partition(rho)
    hooks = sum(rho.hook_lengths())
    first = hooks == n_stat(rho) + n_stat(rho.conjugate()) + rho.size
    second = Fraction(hooks, 2) - n_stat(rho) == Fraction(kappa(rho), 4) + Fraction(rho.size, 2)
    return first and second


@dataclass(frozen=True)
class NeighborSet:
    """Cut and join neighbours of a cycle type.

    Each coefficient is the number of elements of type ``nu`` in the product
    of the transposition class sum with a fixed permutation of type ``mu``.
    """

    joins: tuple[tuple[Partition, int], ...]
    cuts: tuple[tuple[Partition, int], ...]

    def as_dict(self) -> dict[Partition, int]:
        out: dict[Partition, int] = {}
        for nu, c in self.joins + self.cuts:
            out[nu] = out.get(nu, 0) + c
        return out


@lru_cache(maxsize=None)
def cut_join_neighbors(mu: Partition) -> NeighborSet:
    mu = Partition(mu)
    if mu.size < 1:
        raise ValueError("cut/join neighbours need |mu| >= 1")
    m = Counter(mu)
    values = sorted(m)
    joins = []
    for a, i in enumerate(values):
        for j in values[a:]:
            if i == j:
                if m[i] < 2:
                    continue
                count = i * i * m[i] * (m[i] - 1) // 2
            else:
                count = i * j * m[i] * m[j]
            joins.append((mu.remove(i, j).add(i + j), count))
    cuts = []
    for k in sorted(m, reverse=True):
        for i in range(k - 1, (k - 1) // 2, -1):
            j = k - i
            # a k-cycle splits into (i, k - i) in k ways, or k/2 when i == j
            count = k * m[k] if i != j else k * m[k] // 2
            cuts.append((mu.remove(k).add(i, j), count))
    return NeighborSet(tuple(joins), tuple(cuts))
