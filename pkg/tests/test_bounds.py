"""Bound evaluators: Moore orders, girth bounds, legacy bounds, dispatch."""
from __future__ import annotations

import json
from fractions import Fraction as F

import pytest

import eccbounds as eb
from eccbounds.bounds import (
    BoundId,
    GraphParams,
    bound_legacy,
    bound_thm_girth,
    bound_thm_girth_maxdeg,
    evaluate_all,
    girth6_reduction_forms,
    lower_bound_chain,
    moore_order_even,
    moore_order_odd,
)


# ---------------------------------------------------------------------------
# Moore orders

def test_moore_order_odd_values():
    assert moore_order_odd(3, 3) == 4          # delta + 1
    assert moore_order_odd(3, 5) == 10         # Petersen order
    assert moore_order_odd(3, 7) == 22
    assert moore_order_odd(7, 5) == 50         # Hoffman-Singleton order


def test_moore_order_even_values():
    assert moore_order_even(3, 4) == 6         # 2*delta
    assert moore_order_even(3, 6) == 14        # Heawood order
    assert moore_order_even(4, 4) == 8


def test_moore_order_guards():
    with pytest.raises(ValueError, match="singular"):
        moore_order_odd(2, 5)
    with pytest.raises(ValueError):
        moore_order_odd(3, 4)   # wrong parity
    with pytest.raises(ValueError):
        moore_order_even(3, 5)


def test_moore_orders_always_integral():
    # the (delta-2) denominators always divide out
    for delta in range(3, 21):
        for g in range(3, 13):
            if g % 2:
                assert isinstance(moore_order_odd(delta, g), int)
            else:
                assert isinstance(moore_order_even(delta, g), int)


# ---------------------------------------------------------------------------
# girth bound

def test_thm_girth_odd_petersen_params():
    r = bound_thm_girth(GraphParams(n=10, delta=3, g=5))
    assert r.applicable and r.value == F(37, 4)
    assert r.constants == {"K": F(10)}
    assert r.bound is BoundId.THM_GIRTH_ODD


def test_thm_girth_even_values():
    assert bound_thm_girth(GraphParams(n=6, delta=3, g=4)).value == 7
    assert bound_thm_girth(GraphParams(n=14, delta=3, g=6)).value == F(23, 2)


def test_thm_girth_requires_delta3():
    r = bound_thm_girth(GraphParams(n=6, delta=2, g=6))
    assert not r.applicable and "delta >= 3" in r.reason


def test_thm_girth_forest_inapplicable():
    r = bound_thm_girth(GraphParams(n=6, delta=1, g=None))
    assert not r.applicable


# ---------------------------------------------------------------------------
# max-degree variant

def test_maxdeg_odd_worked_example():
    r = bound_thm_girth_maxdeg(GraphParams(n=100, delta=3, Delta=5, g=5))
    assert r.value == F(4513, 100)
    assert r.constants == {"K1": F(10), "K2": F(16)}


def test_maxdeg_collapses_when_degrees_equal():
    for delta in range(3, 21):
        for g in range(3, 13):
            n = 20 * delta ** (g // 2)  # comfortably above K2/L2
            r = bound_thm_girth_maxdeg(GraphParams(n=n, delta=delta, Delta=delta, g=g))
            if g % 2:
                assert r.constants["K1"] == r.constants["K2"]
            else:
                assert r.constants["L1"] == r.constants["L2"]


def test_maxdeg_even_l1_l2_example():
    r = bound_thm_girth_maxdeg(GraphParams(n=100, delta=3, Delta=3, g=6))
    assert r.constants == {"L1": F(7), "L2": F(7)}


def test_maxdeg_small_order_inapplicable():
    r = bound_thm_girth_maxdeg(GraphParams(n=10, delta=3, Delta=3, g=5))
    assert not r.applicable and "exceed K2" in r.reason


def test_maxdeg_matches_plain_bound_shape_when_delta_equals_Delta():
    # with Delta = delta the correction factor collapses to 1
    p = GraphParams(n=200, delta=3, Delta=3, g=5)
    r = bound_thm_girth_maxdeg(p)
    k = moore_order_odd(3, 5)
    assert r.value == F(15, 4) * F(200 - k, k) + 13


def test_maxdeg_monotone_in_Delta():
    # for fixed n, g, delta the value never increases as Delta grows,
    # across the regime n >= 3*K2 the statement is made for
    for delta in (3, 4, 5):
        for g in (3, 5, 7):
            for n in (500, 2000, 10000):
                prev = None
                for Delta in range(delta, delta + 12):
                    r = bound_thm_girth_maxdeg(GraphParams(n=n, delta=delta, Delta=Delta, g=g))
                    if not r.applicable or n < 3 * r.constants["K2"]:
                        break
                    if prev is not None:
                        assert r.value <= prev, (delta, g, n, Delta)
                    prev = r.value


# ---------------------------------------------------------------------------
# legacy bounds

def test_eq1_worked_example():
    assert bound_legacy(GraphParams(n=20, delta=3), BoundId.EQ1).value == 15


def test_eq2_worked_example():
    assert bound_legacy(GraphParams(n=12, delta=3, g=4), BoundId.EQ2).value == 11


def test_eq8_collapses_at_equal_degrees():
    r = bound_legacy(GraphParams(n=16, delta=3, Delta=3, g=5), BoundId.EQ8)
    assert r.constants == {"eps_Delta": F(8), "eps_delta": F(8)}
    assert r.value == F(15, 4) * F(16, 8) + F(37, 4)


def test_legacy_applicability_gates():
    p_tri = GraphParams(n=20, delta=3, Delta=4, g=3)
    assert not bound_legacy(p_tri, BoundId.EQ2).applicable
    assert not bound_legacy(p_tri, BoundId.EQ3).applicable
    assert not bound_legacy(p_tri, BoundId.EQ4).applicable
    assert not bound_legacy(p_tri, BoundId.EQ5).applicable
    assert bound_legacy(p_tri, BoundId.EQ1).applicable
    assert bound_legacy(p_tri, BoundId.EQ6).applicable
    p5 = GraphParams(n=20, delta=3, Delta=4, g=5)
    assert bound_legacy(p5, BoundId.EQ3).applicable
    assert bound_legacy(p5, BoundId.EQ8).applicable
    assert not bound_legacy(p5, BoundId.EQ4).applicable
    p6 = GraphParams(n=20, delta=3, Delta=4, g=6)
    assert bound_legacy(p6, BoundId.EQ4).applicable
    assert bound_legacy(p6, BoundId.EQ5).applicable
    no_delta = GraphParams(n=20, delta=3, g=5)
    assert not bound_legacy(no_delta, BoundId.EQ6).applicable
    assert not bound_legacy(no_delta, BoundId.EQ8).applicable


def test_eq1_available_at_delta_2():
    assert bound_legacy(GraphParams(n=6, delta=2, g=6), BoundId.EQ1).applicable


# ---------------------------------------------------------------------------
# reduction identities (spot checks; the exhaustive sweep is in acceptance)

def test_girth3_closed_form():
    for n in (4, 17, 100, 999):
        v = bound_thm_girth(GraphParams(n=n, delta=3, g=3)).value
        assert v == F(9, 4) * -(-n // 4) + F(5, 2)


def test_girth3_below_eq1_plus_one():
    # the true universal relationship between the two bounds
    for delta in (3, 7, 20):
        for n in range(delta + 1, 400):
            p = GraphParams(n=n, delta=delta, g=3)
            assert bound_thm_girth(p).value < bound_legacy(p, BoundId.EQ1).value + 1


def test_girth4_equals_eq2_minus_one():
    for delta in (3, 5, 11):
        for n in (delta * 2, 37, 200, 1001):
            p = GraphParams(n=n, delta=delta, g=4)
            assert bound_thm_girth(p).value == bound_legacy(p, BoundId.EQ2).value - 1


def test_girth5_closed_form():
    for delta in (3, 4, 9):
        for n in (30, 100, 777):
            v = bound_thm_girth(GraphParams(n=n, delta=delta, g=5)).value
            assert v == F(15, 4) * -(-n // (delta * delta + 1)) + F(11, 2)


def test_girth6_reduction_forms_agree():
    for delta in range(3, 30):
        for n in (50, 333, 5000):
            middle, right = girth6_reduction_forms(GraphParams(n=n, delta=delta, g=6))
            assert middle == right
            assert middle == bound_thm_girth(GraphParams(n=n, delta=delta, g=6)).value


# ---------------------------------------------------------------------------
# chain lower bounds

def test_lower_bound_chain_values():
    assert lower_bound_chain(GraphParams(n=20, delta=3, g=5), 2) == 3
    assert lower_bound_chain(GraphParams(n=40, delta=3, g=5), 4) == F(21, 2)
    assert lower_bound_chain(GraphParams(n=28, delta=3, g=6), 2) == F(9, 2)


def test_lower_bound_chain_order_mismatch():
    with pytest.raises(ValueError, match="not 2 copies"):
        lower_bound_chain(GraphParams(n=21, delta=3, g=5), 2)


# ---------------------------------------------------------------------------
# dispatcher

def test_evaluate_all_petersen():
    results = {r.bound: r for r in evaluate_all(eb.petersen_graph())}
    thm = results[BoundId.THM_GIRTH_ODD]
    assert thm.applicable and thm.value == F(37, 4) and thm.satisfied
    assert not results[BoundId.EQ4].applicable
    assert all(r.satisfied for r in results.values() if r.applicable)


def test_evaluate_all_k4():
    results = {r.bound: r for r in evaluate_all(eb.complete_graph(4))}
    assert results[BoundId.EQ1].applicable and results[BoundId.EQ1].satisfied
    assert results[BoundId.THM_GIRTH_ODD].applicable
    assert results[BoundId.THM_GIRTH_ODD].value == F(19, 4)
    assert not results[BoundId.EQ4].applicable


def test_evaluate_all_c6():
    results = {r.bound: r for r in evaluate_all(eb.cycle_graph(6))}
    assert not results[BoundId.THM_GIRTH_EVEN].applicable
    assert "delta >= 3" in results[BoundId.THM_GIRTH_EVEN].reason
    assert results[BoundId.EQ1].applicable and results[BoundId.EQ1].satisfied


def test_evaluate_all_tree():
    results = evaluate_all(eb.path_graph(6))
    assert all(not r.applicable for r in results)


def test_evaluate_all_sound_on_named(small_graphs):
    for name, g in small_graphs:
        if g.n < 2:
            continue
        for r in evaluate_all(g):
            if r.applicable:
                assert r.satisfied, (name, r.bound)


# ---------------------------------------------------------------------------
# serialization

def test_bound_result_json_round_trip():
    r = bound_thm_girth(GraphParams(n=10, delta=3, g=5)).with_avec(F(2))
    d = r.to_json_dict()
    assert d["bound"] == "ThmGirthOdd"
    assert d["value"] == "37/4"
    assert d["constants"] == {"K": "10"}
    assert d["applicable"] is True and d["satisfied"] is True
    json.dumps(d)  # must be serializable as-is


def test_graph_params_validation():
    with pytest.raises(ValueError):
        GraphParams(n=5, delta=3, Delta=2)
    with pytest.raises(ValueError):
        GraphParams(n=5, delta=-1)
    with pytest.raises(ValueError):
        GraphParams(n=5, delta=2, g=2)


def test_evaluate_all_single_vertex():
    results = evaluate_all(eb.path_graph(1))
    assert all(not r.applicable for r in results)
