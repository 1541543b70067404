import pytest

from clustercrystal import CartanData, ReducedWord, coxeter_square_word
from clustercrystal.errors import IndexOutOfRange
from clustercrystal.roots import e_and_kminus, word_suffix


def test_parse():
    assert CartanData.parse("b3") == CartanData("B", 3) == CartanData.parse("B", 3)
    for bad in ("E6", "D2", "B1", "x"):
        with pytest.raises(ValueError):
            CartanData.parse(bad)


@pytest.mark.parametrize("r", [2, 3, 5])
def test_cartan_entries(r):
    c, b = CartanData("C", r), CartanData("B", r)
    assert c.a(r - 1, r) == -2 and c.a(r, r - 1) == -1
    assert b.a(r, r - 1) == -2 and b.a(r - 1, r) == -1
    if r > 2:
        for cd in (b, c):
            assert cd.a(1, 2) == cd.a(2, 1) == -1


def test_type_d_fork():
    d = CartanData("D", 5)
    assert d.a(3, 5) == d.a(5, 3) == -1
    assert d.a(4, 5) == 0
    assert d.a(3, 4) == -1


@pytest.mark.parametrize("name,count", [("A3", 6), ("B2", 4), ("B4", 16), ("C3", 9),
                                        ("D4", 12), ("D5", 20)])
def test_positive_root_counts(name, count):
    assert len(CartanData.parse(name).positive_roots()) == count


def test_symmetrizer():
    assert CartanData.parse("B3").symmetrizer() == (2, 2, 1)
    assert CartanData.parse("C3").symmetrizer() == (1, 1, 2)
    assert CartanData.parse("D4").symmetrizer() == (1, 1, 1, 1)
    for name in ("B4", "C4", "D5"):
        cd = CartanData.parse(name)
        d = cd.symmetrizer()
        for i in range(cd.rank):
            for j in range(cd.rank):
                assert d[i] * cd.matrix[i][j] == d[j] * cd.matrix[j][i]


def test_reducedness():
    for name in ("B2", "C3", "D3", "D4", "B5"):
        cd = CartanData.parse(name)
        assert cd.is_reduced(coxeter_square_word(cd).letters)
    # c^2 is never reduced in type A
    for r in (2, 3, 4):
        cd = CartanData("A", r)
        assert not cd.is_reduced(coxeter_square_word(cd).letters)
    assert CartanData.parse("A3").is_reduced((1, 2, 1, 3, 2, 1))
    assert not CartanData.parse("B2").is_reduced((1, 1))


def test_word_indexing():
    w = ReducedWord((3, 2, 1, 3, 2, 1))
    assert [w.j(k) for k in range(1, 7)] == [1, 2, 3, 1, 2, 3]
    assert word_suffix(w, 4) == (1, 2)
    assert word_suffix(w, 6) == ()
    with pytest.raises(IndexOutOfRange):
        w.j(7)


def test_kminus():
    e, km = e_and_kminus(ReducedWord((3, 2, 1, 3, 2, 1)), 3)
    assert e == {4, 5, 6}
    assert km == {4: 1, 5: 2, 6: 3, -1: 4, -2: 5, -3: 6}
