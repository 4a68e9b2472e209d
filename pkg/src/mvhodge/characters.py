"""Irreducible characters of the symmetric groups.

Values come from the Murnaghan-Nakayama rule, run on beta-sets (abacus
positions) so that removing a border strip of length ``k`` is moving one bead
``k`` places down.  Results are memoized on (shape, remaining cycle type).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, class_size, enumerate_partitions, z

TABLE_CACHE_LIMIT = 8


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    l = len(shape)
    return tuple(p + l - 1 - i for i, p in enumerate(shape))


def _from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    l = len(beta)
    return Partition(p for p in (b - (l - 1 - i) for i, b in enumerate(beta)) if p > 0)


def strip_removals(shape: Partition, k: int):
    """Yield (remaining shape, sign) for every border strip of length ``k``."""
    beta = _beta_set(shape)
    occupied = set(beta)
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        between = sum(1 for c in beta if target < c < b)
        rest = [c for c in beta if c != b] + [target]
        yield _from_beta(rest), -1 if between % 2 else 1


@lru_cache(maxsize=None)
def _mn(shape: Partition, cycle_type: tuple[int, ...]) -> int:
    if not cycle_type:
        return 1 if not shape else 0
    k, rest = cycle_type[0], cycle_type[1:]
    return sum(sign * _mn(sub, rest) for sub, sign in strip_removals(shape, k))


def mn_character(nu, mu) -> int:
    """``chi_nu`` evaluated on the class of cycle type ``mu``."""
    nu, mu = Partition(nu), Partition(mu)
    if nu.size != mu.size:
        raise ValueError(f"size mismatch: |{list(nu)}| != |{list(mu)}|")
    return _mn(nu, tuple(mu))


def dimension(nu) -> int:
    nu = Partition(nu)
    return mn_character(nu, Partition([1] * nu.size))


@dataclass(frozen=True)
class CharacterTable:
    """Rows indexed by irreducibles, columns by classes, both reverse-lex."""

    d: int
    irreducibles: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, key) -> int:
        nu, mu = key
        return self.values[self.irreducibles.index(Partition(nu))][self.classes.index(Partition(mu))]

    def column_orthogonality(self) -> bool:
        n = len(self.classes)
        for a in range(n):
            for b in range(a, n):
                s = sum(row[a] * row[b] for row in self.values)
                expected = z(self.classes[a]) if a == b else 0
                if s != expected:
                    return False
        return True

    def row_orthogonality(self) -> bool:
        zs = [z(mu) for mu in self.classes]
        for a, ra in enumerate(self.values):
            for b in range(a, len(self.values)):
                rb = self.values[b]
                s = sum(Fraction(x * y, zz) for x, y, zz in zip(ra, rb, zs))
                if s != (1 if a == b else 0):
                    return False
        return True


def _build_table(d: int) -> CharacterTable:
    parts = tuple(enumerate_partitions(d))
    values = tuple(tuple(mn_character(nu, mu) for mu in parts) for nu in parts)
    table = CharacterTable(d, parts, parts, values)
    if not table.column_orthogonality():  # pragma: no cover
        raise ArithmeticError(f"character table of S_{d} fails column orthogonality")
    return table


@lru_cache(maxsize=TABLE_CACHE_LIMIT + 1)
def _cached_table(d: int) -> CharacterTable:
    return _build_table(d)


def character_table(d: int) -> CharacterTable:
    if d < 1:
        raise ValueError("character tables need d >= 1")
    if d <= TABLE_CACHE_LIMIT:
        return _cached_table(d)
    return _build_table(d)


def central_character(nu, mu) -> Fraction:
    """Scalar by which the class sum of type ``mu`` acts on the irreducible ``nu``."""
    nu, mu = Partition(nu), Partition(mu)
    chi = mn_character(nu, mu)
    return Fraction(class_size(mu) * chi, dimension(nu))


def transposition_class(d: int) -> Partition:
    if d < 2:
        raise ValueError("S_d has transpositions only for d >= 2")
    return Partition([2] + [1] * (d - 2))


def sum_of_squared_dimensions(d: int) -> int:
    return sum(dimension(nu) ** 2 for nu in enumerate_partitions(d))


def is_factorial_sum(d: int) -> bool:
    return sum_of_squared_dimensions(d) == factorial(d)
