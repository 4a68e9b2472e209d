from fractions import Fraction
from math import factorial, prod

import pytest

from mvhodge.characters import (central_character, character_table, dimension, is_factorial_sum,
                                mn_character, transposition_class)
from mvhodge.partitions import Partition, enumerate_partitions, kappa


def hook_dimension(nu):
    return factorial(nu.size) // prod(nu.hook_lengths())


def test_s3_table():
    t = character_table(3)
    assert t[(2, 1), (3,)] == -1
    assert t[(2, 1), (1, 1, 1)] == 2
    assert t[(1, 1, 1), (2, 1)] == -1


def test_known_values():
    # S_4 standard representation on a 4-cycle, and the 2-dim irreducible on (2,2)
    assert mn_character((3, 1), (4,)) == -1
    assert mn_character((2, 2), (2, 2)) == 2
    with pytest.raises(ValueError):
        mn_character((2,), (1,))


@pytest.mark.parametrize("d", range(1, 9))
def test_orthogonality(d):
    t = character_table(d)
    assert t.column_orthogonality()
    assert t.row_orthogonality()
    assert is_factorial_sum(d)


def test_dimension_matches_hook_formula():
    for n in range(1, 10):
        for nu in enumerate_partitions(n):
            assert dimension(nu) == hook_dimension(nu)


def test_sign_twist():
    for n in range(1, 8):
        for nu in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                sign = (-1) ** (n - len(mu))
                assert mn_character(nu.conjugate(), mu) == sign * mn_character(nu, mu)


def test_kappa_is_twice_central_character():
    assert central_character((2,), (2,)) == 1
    for n in range(2, 11):
        c = transposition_class(n)
        for nu in enumerate_partitions(n):
            assert kappa(nu) == 2 * central_character(nu, c)
