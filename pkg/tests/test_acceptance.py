"""Acceptance criteria 1-8. Run with ``pytest tests/test_acceptance.py``;
a summary line per criterion is printed at the end of the session."""
import random
from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from clustercrystal import (CartanData, Monomial, coxeter_square_word, crystal_component,
                            crystal_stats, default_p, enumerate_cluster_variables, evaluate_minor,
                            initial_seed, kashiwara_e, kashiwara_f, parse_monomial,
                            parse_polynomial)
from clustercrystal.cluster import ExchangeMatrix, check_rewrite
from clustercrystal.minors import (commutation_check, factorization_roundtrip,
                                   factorization_roundtrip_numeric, lowering_commutation_check)
from clustercrystal.verifier import (ONE_OR_TWO, Identities, SeedCache, full_verification,
                                     theorem_cases)

SUITE = ["B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4"]
PROPS = settings(max_examples=1000, deadline=None, derandomize=True,
                 suppress_health_check=[HealthCheck.too_slow])


def P(text, r):
    return parse_polynomial(text, r)


# ---------------------------------------------------------------- 1

B2_REFERENCE = [
    "a^{L1}*(Y[1,1] + Y[2,2]^2/Y[2,1])",
    "a^{L2}*(Y[1,2] + Y[1,1]/Y[2,2] + Y[2,2]/Y[2,1])",
    "a^{L1}*Y[2,1]",
    "a^{L1}*Y[2,2]",
    "a^{L2}*(Y[1,2]*Y[2,1] + Y[1,1]*Y[2,1]/Y[2,2])",
    "a^{2*L2}*(Y[1,2]^2*Y[2,1] + 2*Y[1,1]*Y[1,2]*Y[2,1]/Y[2,2]"
    " + Y[1,1]^2*Y[2,1]/Y[2,2]^2 + Y[1,1])",
]


@pytest.mark.criterion(1)
def test_b2_cluster_variables(timer):
    with timer() as t:
        got = enumerate_cluster_variables(initial_seed(CartanData.parse("B2")))
    assert got == {P(s, 2) for s in B2_REFERENCE}
    assert t.seconds < 1


# ---------------------------------------------------------------- 2

@pytest.mark.criterion(2)
def test_c2_minors(timer):
    cd = CartanData.parse("C2")
    w = coxeter_square_word(cd)
    with timer() as t:
        d1 = evaluate_minor(cd, w, 1, (1,))
        d2 = evaluate_minor(cd, w, 2, (1, 2))
    assert d1 == P("a^{L1}*(Y[1,1] + Y[2,2]/Y[2,1])", 2)
    assert d2 == P("a^{L2}*(Y[1,2] + Y[1,1]^2/Y[2,2] + 2*Y[1,1]/Y[2,1] + Y[2,2]/Y[2,1]^2)", 2)
    assert d2.coefficient(parse_monomial("a^{L2}*Y[1,1]/Y[2,1]", 2)) == 2
    assert t.seconds < 1


# ---------------------------------------------------------------- 3

CHAINS = [
    ("C2", ["Y[1,1]", 1, "Y[2,2]/Y[2,1]", 2, "Y[2,1]/Y[3,2]", 1, "1/Y[3,1]"]),
    ("C2", ["Y[1,2]", 2, "Y[1,1]^2/Y[2,2]", 1, "Y[1,1]/Y[2,1]", 1,
            "Y[2,2]/Y[2,1]^2", 2, "1/Y[3,2]"]),
    ("B3", ["Y[1,1]", 1, "Y[2,2]/Y[2,1]", 2, "Y[3,3]^2/Y[3,2]", 3, "Y[3,3]/Y[4,3]", 3,
            "Y[3,2]/Y[4,3]^2", 2, "Y[3,1]/Y[4,2]", 1, "1/Y[4,1]"]),
]


def _chain_edges(cd, chain):
    ms = [parse_monomial(x, cd.rank) for x in chain[::2]]
    return ms, {(ms[t], chain[2 * t + 1], ms[t + 1]) for t in range(len(ms) - 1)}


@pytest.mark.criterion(3)
@pytest.mark.parametrize("kind,chain", CHAINS, ids=["C2-L1", "C2-L2", "B3-L1"])
def test_crystal_chains(kind, chain, timer):
    cd = CartanData.parse(kind)
    p = default_p(cd)
    with timer() as t:
        ms, edges = _chain_edges(cd, chain)
        for a, i, b in edges:
            assert kashiwara_f(cd, p, i, a) == b
        verts, got = crystal_component(cd, p, ms[0])
    assert verts == set(ms)
    assert got == edges
    assert t.seconds < 1


# ---------------------------------------------------------------- 4

def string_positive_roots(matrix):
    """Positive roots grown height by height with root strings.

    beta + alpha_i is a root iff q > 0 where p - q = <beta, alpha_i^vee>
    and p is the length of the downward alpha_i-string through beta.
    """
    r = len(matrix)
    simple = [tuple(int(k == i) for k in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(r):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * matrix[i][j] for j in range(r))
                if p - pairing > 0:
                    up = tuple(b + (k == i) for k, b in enumerate(beta))
                    nxt.add(up)
        nxt -= roots
        roots |= nxt
        layer = list(nxt)
    return roots


@pytest.mark.criterion(4)
def test_counts(timer):
    expected = {"B2": 6, "B3": 12, "C3": 12, "D4": 16}
    with timer() as t:
        for name, n in expected.items():
            cd = CartanData.parse(name)
            got = len(enumerate_cluster_variables(initial_seed(cd)))
            brute = len(string_positive_roots(cd.matrix)) + cd.rank
            assert got == n == brute == cd.almost_positive_count(), name
    assert t.seconds < 60


# ---------------------------------------------------------------- 5

@pytest.mark.criterion(5)
def test_theorem_suite(timer):
    with timer() as t:
        for name in SUITE:
            cd = CartanData.parse(name)
            summ = full_verification(cd)
            assert summ.ok, (name, summ.unmatched, [c["id"] for c in summ.cases
                                                      if c["status"] != "PASS"])
            assert summ.matched == summ.enumerated == cd.almost_positive_count()
            rules = {tc.id: [s.rule for s in tc.summands] for tc in theorem_cases(cd)}
            for case in summ.cases:
                for rule, prof in zip(rules[case["id"]], case["coefficient_profile"]):
                    if rule == ONE_OR_TWO:
                        assert set(prof) <= {1, 2}, (case["id"], prof)
    assert t.seconds < 300


# ---------------------------------------------------------------- 6

RANK_3_4 = ["B3", "B4", "C3", "C4", "D3", "D4"]


@pytest.mark.criterion(6)
def test_identity_suite(timer):
    with timer() as t:
        for name in RANK_3_4:
            cd = CartanData.parse(name)
            ids = Identities(cd)
            for ident, k in ids.catalogue():
                lhs, rhs = ids.build(ident, k)
                assert lhs == rhs, (name, ident, k)
    assert t.seconds < 30


@pytest.mark.criterion(6)
@pytest.mark.xfail(strict=True, reason="the type D recursion in its stated form fails at k = r-2; the factor there "
                   "is Y[2,r-1]*Y[2,r]/Y[2,r-2] (see test_identity_suite)")
def test_recursion_d_stated_range():
    bad = []
    for name in ["D3", "D4"]:
        cd = CartanData.parse(name)
        ids = Identities(cd)
        for k in range(1, cd.rank - 1):
            lhs, rhs = ids.build("recursion", k)
            if lhs != rhs:
                bad.append((name, k))
    assert not bad, bad


# ---------------------------------------------------------------- 7

PROP_TYPES = ["B2", "B3", "C3", "D4", "B4", "C4"]


@lru_cache(maxsize=None)
def _root(name):
    return initial_seed(CartanData.parse(name))


@lru_cache(maxsize=20000)
def _walk(name, path):
    if not path:
        return _root(name)
    return _walk(name, path[:-1]).mutate(path[-1])


def _path(draw, name, max_len=8):
    cols = list(_root(name).matrix.cols)
    idx = draw(st.lists(st.sampled_from(cols), max_size=max_len))
    # drop immediate repeats, which just undo a step
    out = []
    for k in idx:
        if out and out[-1] == k:
            continue
        out.append(k)
    return tuple(out)


@st.composite
def seed_paths(draw):
    name = draw(st.sampled_from(PROP_TYPES))
    return name, _path(draw, name)


@pytest.mark.criterion(7)
@PROPS
@given(seed_paths(), st.data())
def test_mutation_is_involution(np, data):
    name, path = np
    s = _walk(name, path)
    k = data.draw(st.sampled_from(sorted(s.mutable)))
    back = s.mutate(k).mutate(k)
    assert back.same_labelled(s)


@st.composite
def symmetrizable_matrices(draw):
    n = draw(st.integers(2, 6))
    d = [draw(st.integers(1, 3)) for _ in range(n)]
    ent = {}
    for i in range(n):
        for j in range(i + 1, n):
            s = draw(st.integers(-2, 2))
            if s:
                # b_ij = s_ij d_j with s skew gives d_i b_ij = -d_j b_ji
                ent[i, j] = s * d[j]
                ent[j, i] = -s * d[i]
    seq = draw(st.lists(st.integers(0, n - 1), max_size=6))
    return ExchangeMatrix(range(n), range(n), ent), d, seq


@pytest.mark.criterion(7)
@PROPS
@given(symmetrizable_matrices())
def test_mutation_preserves_skew_symmetrizability(case):
    B, d, seq = case
    for k in seq:
        B = B.mutate(k)
        assert B.is_skew_symmetrizable()
        for i in B.cols:
            for j in B.cols:
                assert d[i] * B[i, j] == -d[j] * B[j, i]


@pytest.mark.criterion(7)
def test_rewrite_rules_on_verification_paths(timer):
    with timer() as t:
        steps = 0
        for name in SUITE:
            cd = CartanData.parse(name)
            cache = SeedCache(cd)
            for tc in theorem_cases(cd):
                cache.after(tc.sequence)
            for path, rep in cache.rewrites:
                assert rep["ok"], (name, path, rep["mismatches"])
            steps += len(cache.rewrites)
    assert steps > 0
    assert t.seconds < 60


@pytest.mark.criterion(7)
@PROPS
@given(seed_paths(), st.data())
def test_rewrite_rules_random_paths(np, data):
    name, path = np
    s = _walk(name, path)
    k = data.draw(st.sampled_from(sorted(s.mutable)))
    rep = check_rewrite(s.matrix, k)
    assert rep["ok"], rep["mismatches"]


CRYSTAL_TYPES = ["A3", "B2", "B3", "C2", "C3", "D4"]


@st.composite
def monomials(draw):
    name = draw(st.sampled_from(CRYSTAL_TYPES))
    cd = CartanData.parse(name)
    exps = draw(st.dictionaries(
        st.tuples(st.integers(1, 4), st.integers(1, cd.rank)),
        st.integers(-3, 3), max_size=6))
    return cd, Monomial(exps, rank=cd.rank)


@pytest.mark.criterion(7)
@PROPS
@given(monomials(), st.data())
def test_kashiwara_operators_are_inverse(cm, data):
    cd, m = cm
    p = default_p(cd)
    i = data.draw(st.integers(1, cd.rank))
    f = kashiwara_f(cd, p, i, m)
    if f is not None:
        assert kashiwara_e(cd, p, i, f) == m
    e = kashiwara_e(cd, p, i, m)
    if e is not None:
        assert kashiwara_f(cd, p, i, e) == m


@pytest.mark.criterion(7)
@PROPS
@given(monomials())
def test_phi_minus_eps_is_weight(cm):
    cd, m = cm
    wt, phi, eps = crystal_stats(cd, m)
    # wt(h_i) read off as the total exponent of color i
    expect = [sum(e for _, c, e in m.y if c == i) for i in range(1, cd.rank + 1)]
    assert list(wt) == expect
    assert [a - b for a, b in zip(phi, eps)] == expect
    assert min(phi) >= 0 and min(eps) >= 0


# ---------------------------------------------------------------- 8

COMMUTATION_TYPES = ["A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4"]


@pytest.mark.criterion(8)
def test_factorization_and_commutation(timer):
    rng = random.Random(20261014)
    with timer() as t:
        for r in (2, 3):
            assert factorization_roundtrip(r)
        for _ in range(100):
            r = rng.choice((2, 3))
            point = {(s, l): Fraction(rng.choice([-1, 1]) * rng.randint(1, 50), rng.randint(1, 50))
                     for s in (1, 2) for l in range(1, r + 1)}
            tvals = [Fraction(rng.randint(1, 50), rng.randint(1, 50)) for _ in range(r)]
            assert factorization_roundtrip_numeric(r, point, tvals)
        for name in COMMUTATION_TYPES:
            cd = CartanData.parse(name)
            for i in range(1, cd.rank + 1):
                for j in range(1, cd.rank + 1):
                    assert commutation_check(cd, i, j), (name, i, j)
                    assert lowering_commutation_check(cd, i, j), (name, i, j)
    assert t.seconds < 10
