from math import comb

import pytest

from clustercrystal import CartanData
from clustercrystal.errors import UnsupportedRep
from clustercrystal.reps import Representation

TYPES = ["A3", "B2", "B3", "C2", "C3", "D3", "D4"]


def _dim(cd, j):
    r = cd.rank
    if cd.kind == "A":
        return comb(r + 1, j)
    if cd.kind == "B":
        return 2 ** r if j == r else comb(2 * r + 1, j)
    if cd.kind == "D" and j >= r - 1:
        return 2 ** (r - 1)
    # the C wedge powers are the ambient modules containing V(L_j)
    return comb(2 * r, j)


def _op(rep, op, i, vec):
    """Infinitesimal action: degree-one part of exp(t X)."""
    out = {}
    for b, c in vec.items():
        for b2, degs in rep.exp_action(op, i, b).items():
            if 1 in degs:
                out[b2] = out.get(b2, 0) + c * degs[1]
    return {b: c for b, c in out.items() if c}


@pytest.mark.parametrize("name", TYPES)
def test_dimensions_and_highest_weight(name):
    cd = CartanData.parse(name)
    for j in range(1, cd.rank + 1):
        rep = Representation(cd, j)
        assert len(set(rep.basis())) == _dim(cd, j)
        assert rep.weight(rep.highest()) == tuple(int(k == j - 1) for k in range(cd.rank))


@pytest.mark.parametrize("name", TYPES)
def test_serre_commutator(name):
    """[e_i, f_j] = delta_ij h_i on every basis vector."""
    cd = CartanData.parse(name)
    r = cd.rank
    for j0 in range(1, r + 1):
        rep = Representation(cd, j0)
        for b in rep.basis():
            for i in range(1, r + 1):
                for j in range(1, r + 1):
                    ef = _op(rep, "e", i, _op(rep, "f", j, {b: 1}))
                    fe = _op(rep, "f", j, _op(rep, "e", i, {b: 1}))
                    diff = {k: ef.get(k, 0) - fe.get(k, 0) for k in set(ef) | set(fe)}
                    diff = {k: v for k, v in diff.items() if v}
                    want = {b: rep.weight(b)[i - 1]} if i == j and rep.weight(b)[i - 1] else {}
                    assert diff == want, (name, j0, b, i, j)


@pytest.mark.parametrize("name", TYPES)
def test_f_lowers_weight_by_simple_root(name):
    cd = CartanData.parse(name)
    for j0 in range(1, cd.rank + 1):
        rep = Representation(cd, j0)
        for b in rep.basis():
            for i in range(1, cd.rank + 1):
                for b2 in _op(rep, "f", i, {b: 1}):
                    expect = tuple(x - y for x, y in zip(rep.weight(b), cd.simple_root(i)))
                    assert rep.weight(b2) == expect


def test_bad_index():
    with pytest.raises(UnsupportedRep):
        Representation(CartanData.parse("B2"), 3)
