import pytest
import sympy as sp

from helpers import agrees, lam, tau
from mvhodge._parallel import parallel_map
from mvhodge.exact import I, WindowError, XLaurentRational, sin_block
from mvhodge.mvcore import series as S
from mvhodge.mvcore.series import (connected_by_unions, connected_series, disconnected_series,
                                   initial_check, initial_closed_form, ordered_splits, v_exact,
                                   v_series, v_series_from_blocks)
from mvhodge.partitions import Partition, enumerate_partitions, partitions_up_to


def test_v_single_box():
    x = XLaurentRational.monomial(1)
    expected = (-I * (x - XLaurentRational.monomial(-1))).inverse()
    assert v_exact((1,)) == expected
    assert v_exact((1,), "product") == expected


def test_v_two_boxes_coincide():
    assert v_exact((2,)) == v_exact((1, 1))
    assert v_exact((2,), "product") == v_exact((1, 1), "product")
    with pytest.raises(ValueError):
        v_exact(())


@pytest.mark.parametrize("n", range(1, 7))
def test_v_forms_and_valuation(n):
    for nu in enumerate_partitions(n):
        assert v_exact(nu, "product") == v_exact(nu, "hook")
        s = v_series(nu, 4)
        assert s.valuation == -n
        assert s == v_series_from_blocks(nu, 4)


def test_disconnected_single_box():
    r = disconnected_series(1, 7)
    assert r[(1,)] == sin_block(1, 9).inverse().truncate(7)
    assert r[(1,)].tau_degree == 0


def test_disconnected_two_boxes_closed_form():
    r = disconnected_series(2, 6)
    expr = sp.cos((tau + sp.Rational(1, 2)) * lam) / (4 * sp.sin(lam / 2) * sp.sin(lam))
    assert agrees(r[(1, 1)], expr, -2, 6)


def test_p2_coefficient_at_zero():
    r = disconnected_series(2, 6, 0)
    assert agrees(r[(2,)].evaluate_tau(0), sp.I / (4 * sp.sin(lam)), -1, 6)


def test_connected_examples():
    c = connected_series(2, 6)
    assert c[(1,)] == disconnected_series(2, 6)[(1,)]
    assert c[(1, 1)].evaluate_tau(0).is_zero


def test_ordered_splits():
    mu = Partition([2, 1, 1])
    assert len(list(ordered_splits(mu, 1))) == 1
    # (2)(1,1), (1,1)(2), (2,1)(1), (1)(2,1)
    assert len(list(ordered_splits(mu, 2))) == 4
    assert len(list(ordered_splits(mu, 3))) == 3


@pytest.mark.parametrize("d", [1, 2, 3])
def test_log_matches_union_expansion(d):
    by_unions = connected_by_unions(d, 6, 3)
    c = connected_series(d, 6, 3)
    for mu in partitions_up_to(d):
        assert by_unions[mu] == c[mu]


def test_initial_closed_form_values():
    cf = initial_closed_form(2, 6)
    assert cf[Partition([1])] == sin_block(1, 8).inverse() * 1
    assert agrees(cf[Partition([2])], sp.I / (4 * sp.sin(lam)), -1, 6)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_initial_check(d):
    assert initial_check(d, 8).passed


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_parity_and_floors(d):
    dis = disconnected_series(d, 6, 3)
    con = connected_series(d, 6, 3)
    for mu in partitions_up_to(d):
        l = len(mu)
        assert dis[mu].valuation >= -l
        assert con[mu].valuation >= l - 2
        for s in (dis[mu], con[mu]):
            for k in range(s.valuation, s.order):
                if (k - l) % 2:
                    assert not s.coefficient(k)


def test_window_validation():
    with pytest.raises(ValueError):
        disconnected_series(0, 4)
    with pytest.raises(WindowError):
        disconnected_series(3, -3)


def test_cache_restriction_matches_fresh_build():
    big = disconnected_series(3, 8, 4)
    S.clear_caches()
    small = disconnected_series(2, 5, 2)
    for mu in partitions_up_to(2):
        assert big.restrict(2, 5, 2)[mu] == small[mu]
    homog = disconnected_series(3, 5, 2, homogeneous=True)
    assert set(homog.element.terms) == set(enumerate_partitions(3))


def test_thread_count_does_not_change_result(monkeypatch):
    S.clear_caches()
    serial = disconnected_series(3, 4, 2)
    S.clear_caches()
    monkeypatch.setenv("MV_THREADS", "2")
    parallel = disconnected_series(3, 4, 2)
    S.clear_caches()
    assert serial.element == parallel.element
    assert parallel_map(abs, [-1, 2, -3]) == [1, 2, 3]
