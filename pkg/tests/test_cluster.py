import json

import pytest

from clustercrystal import (CartanData, ExchangeMatrix, enumerate_cluster_variables, gamma_graph,
                            initial_exchange_matrix, initial_seed, mutation_diagram,
                            parse_polynomial)
from clustercrystal.cluster import (check_rewrite, compare_rewrite, diagram_dot, enumerate_seeds,
                                    mutate_matrix, mutate_seed,
                                    seed_from_json, theorem_label)
from clustercrystal.errors import BudgetExceeded, InvariantViolation, OutOfRange
from clustercrystal.roots import ReducedWord


def test_b2_diagram():
    s = initial_seed(CartanData.parse("B2"))
    assert mutation_diagram(s) == {(-2, 4): 1, (-1, 3): 1, (3, 1): 1, (4, -1): 1, (4, 2): 1,
                                   (2, 3): 2, (3, 4): -2}
    dot = diagram_dot(mutation_diagram(s), {k: f"x{k}" for k in s.matrix.rows})
    assert dot.startswith("digraph")
    assert '"2" -> "3" [label="2"];' in dot and '"3" -> "4" [label="-2"];' in dot


def test_b2_exchange_by_hand():
    # x4' = (x_{-2} x_3 + x_{-1} x_2) / x_4 collapses to a^{L1} Y[2,2]
    s = initial_seed(CartanData.parse("B2"))
    assert s.mutate(4).vars[4] == parse_polynomial("a^{L1}*Y[2,2]", 2)
    # x3' = (x_{-1} x_2^2 + x_1 x_4^2) / x_3
    assert s.mutate(3).vars[3] == parse_polynomial(
        "a^{2*L2}*(Y[1,2]^2*Y[2,1] + 2*Y[1,1]*Y[1,2]*Y[2,1]/Y[2,2]"
        " + Y[1,1]^2*Y[2,1]/Y[2,2]^2 + Y[1,1])", 2)


@pytest.mark.parametrize("name", ["B2", "B4", "C3", "C5", "D3", "D5"])
def test_initial_matrix(name):
    cd = CartanData.parse(name)
    s = initial_seed(cd)
    r = cd.rank
    assert s.matrix.cols == tuple(range(r + 1, 2 * r + 1))
    assert s.matrix.is_skew_symmetrizable()
    for k in s.mutable:
        assert s.mutate(k).mutate(k).same_labelled(s)


def test_empty_e_only_frozen_arrows():
    cd = CartanData.parse("B2")
    w = ReducedWord((2, 1))
    assert gamma_graph(cd, w) == {(-1, 1), (-2, 2)}
    assert initial_exchange_matrix(cd, w).cols == ()


def test_simply_laced_entries():
    s = initial_seed(CartanData.parse("A3"), ReducedWord((1, 2, 1, 3, 2, 1)))
    P = s.matrix.principal()
    assert all(abs(x) <= 1 for row in s.matrix.to_rows() for x in row)
    assert all(P[i][j] == -P[j][i] for i in range(len(P)) for j in range(len(P)))


@pytest.mark.parametrize("name,count", [("B2", 6), ("B3", 12), ("C3", 12), ("D3", 9), ("D4", 16),
                                        ("B4", 20), ("C4", 20), ("D5", 25), ("B5", 30), ("C5", 30)])
def test_counts(name, count):
    cd = CartanData.parse(name)
    assert len(enumerate_cluster_variables(initial_seed(cd))) == count == cd.almost_positive_count()


def test_threads_same_result():
    s = initial_seed(CartanData.parse("D4"))
    assert enumerate_cluster_variables(s, threads=4) == enumerate_cluster_variables(s)


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_seeds(initial_seed(CartanData.parse("C3")), cap=3)


def test_json_roundtrip():
    s = initial_seed(CartanData.parse("C3")).mutate(5).mutate(4)
    back = seed_from_json(json.loads(s.dumps()))
    assert back.same_labelled(s)
    assert back == s


def test_errors():
    s = initial_seed(CartanData.parse("B2"))
    with pytest.raises(OutOfRange):
        s.mutate(1)
    with pytest.raises(OutOfRange):
        theorem_label(s.cd, 3)
    with pytest.raises(InvariantViolation):
        ExchangeMatrix((1, 2), (1, 2), {(1, 2): 1, (2, 1): 1})
    with pytest.raises(OutOfRange):
        mutation_diagram(ExchangeMatrix((1, 2), (1, 2), {(1, 2): 3, (2, 1): -3}))


@pytest.mark.parametrize("name", ["B3", "C4", "D4"])
def test_rewrite_rules_initial(name):
    s = initial_seed(CartanData.parse(name))
    for k in s.mutable:
        assert check_rewrite(s.matrix, k)["ok"]


def test_rewrite_checker_detects_wrong_diagram():
    s = initial_seed(CartanData.parse("B3"))
    D = mutation_diagram(s)
    bad = compare_rewrite(D, 5, D, s.matrix.cols)
    assert not bad["ok"] and bad["mismatches"]


def test_b2_mutation_at_column_4():
    s = initial_seed(CartanData.parse("B2"))
    before = mutation_diagram(s)
    after = mutation_diagram(mutate_seed(s, 4))
    flip = {1: 1, 2: -2, -2: 2}
    for (a, b), lab in before.items():
        if 4 in (a, b):
            assert after[(b, a)] == flip[lab]
    # the path 3 -> 4 -> 2 cancels the doubled arrow 2 -> 3
    assert {(2, 3), (3, 2)}.isdisjoint(after)
    assert after == {(-1, 4): 1, (2, 4): 1, (3, -1): 1, (3, 1): 1, (4, -2): 1, (4, 3): 2}
    assert mutate_matrix(s.matrix, 4) == s.mutate(4).matrix
