from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from mvhodge.partitions import (EMPTY, Partition, aut_order, class_size, cut_join_neighbors,
                                enumerate_partitions, hook_sum_identity_check, kappa, n_stat,
                                partitions_up_to, stats, z)

# number of partitions of n, OEIS A000041
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]

partitions = st.integers(1, 10).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


def test_validation_and_parse():
    assert Partition.parse("3,1,1") == Partition([3, 1, 1])
    assert Partition.parse("") == EMPTY
    for bad in ("1,2", "2,,1", "a", "2,0"):
        with pytest.raises(ValueError):
            Partition.parse(bad)
    assert Partition.from_parts([1, 3, 1]) == Partition([3, 1, 1])


def test_enumeration_counts_and_order():
    for n, c in enumerate(PARTITION_COUNTS):
        assert len(enumerate_partitions(n)) == c
    assert enumerate_partitions(3) == [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    assert len(partitions_up_to(4)) == 1 + 2 + 3 + 5  # the empty partition is excluded


def test_statistics_examples():
    mu = Partition([2, 2, 1])
    assert z(mu) == 2 ** 2 * factorial(2) * 1
    assert aut_order(mu) == 2
    assert class_size(mu) == factorial(5) // z(mu)
    assert kappa(Partition([2])) == 2 and kappa(Partition([1, 1])) == -2
    assert n_stat(Partition([2, 1])) == 1
    assert Partition([3, 1]).hook_lengths() == [4, 2, 1, 1]
    s = stats(mu)
    assert s.z == z(mu) and s.kappa == kappa(mu)


@given(partitions)
def test_conjugate_involution(mu):
    assert mu.conjugate().conjugate() == mu
    assert kappa(mu.conjugate()) == -kappa(mu)


@given(st.integers(1, 8))
def test_class_sizes_sum_to_factorial(n):
    assert sum(Fraction(factorial(n), z(mu)) for mu in enumerate_partitions(n)) == factorial(n)


def test_hook_identities_to_12():
    assert all(hook_sum_identity_check(rho)
               for n in range(1, 13) for rho in enumerate_partitions(n))


# -- cut and join against brute force in S_d ------------------------------------------


def _perm_of_type(mu):
    perm, start = [], 0
    for part in mu:
        cyc = list(range(start, start + part))
        perm += [None] * part
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
        start += part
    return perm


def _cycle_type(perm):
    seen, parts = set(), []
    for s in range(len(perm)):
        if s not in seen:
            k, x = 0, s
            while x not in seen:
                seen.add(x)
                x = perm[x]
                k += 1
            parts.append(k)
    return Partition.from_parts(parts)


def _brute_neighbors(mu):
    sigma = _perm_of_type(mu)
    out = Counter()
    for a, b in combinations(range(mu.size), 2):
        t = list(range(mu.size))
        t[a], t[b] = b, a
        out[_cycle_type([t[sigma[x]] for x in range(mu.size)])] += 1
    return dict(out)


def test_neighbor_example():
    nb = cut_join_neighbors(Partition([2, 1]))
    assert nb.as_dict() == {Partition([3]): 2, Partition([1, 1, 1]): 1}


@pytest.mark.parametrize("n", range(1, 8))
def test_neighbors_match_symmetric_group(n):
    for mu in enumerate_partitions(n):
        assert cut_join_neighbors(mu).as_dict() == _brute_neighbors(mu)


def test_neighbor_total_is_number_of_transpositions():
    for mu in enumerate_partitions(6):
        assert sum(cut_join_neighbors(mu).as_dict().values()) == 15
