"""Fundamental representations: vector, wedge and spin weight bases.

Vectors of V(L1) are encoded by positions: v_i -> i, v_0 -> r+1 and
v_{i bar} -> 2r+2-i, so integer order is 1 < ... < r < 0 < r bar < ... < 1 bar.
Type A uses positions 1..r+1 directly. Wedge basis elements are strictly
increasing position tuples. Spin basis elements are tuples of +1/-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from math import factorial
from typing import Union

from .errors import RepMismatch, UnsupportedRep
from .laurent import LaurentPolynomial, apow
from .roots import CartanData


# ------------------------------------------------------------ V(L1) tables

@lru_cache(maxsize=None)
def vector_data(cd):
    """(positions, weight map, f map, e map, norms) for V(L1).

    The f/e maps send (i, position) to a list of (position, int coeff).
    """
    kind, r = cd.kind, cd.rank
    L = lambda k: tuple(1 if m == k - 1 else 0 for m in range(r))
    zero = (0,) * r

    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(a):
        return tuple(-x for x in a)

    f, e, wt = {}, {}, {}
    if kind == "A":
        pos = list(range(1, r + 2))
        for i in pos:
            lo = L(i - 1) if i > 1 else zero
            hi = L(i) if i <= r else zero
            wt[i] = sub(hi, lo)
        for i in range(1, r + 1):
            f[(i, i)] = [(i + 1, 1)]
            e[(i, i + 1)] = [(i, 1)]
        return tuple(pos), wt, f, e, {p: 1 for p in pos}

    bar = lambda i: 2 * r + 2 - i
    pos = list(range(1, r + 1)) + ([r + 1] if kind == "B" else []) + [bar(i) for i in range(r, 0, -1)]
    for i in range(1, r + 1):
        wt[i] = sub(L(i), L(i - 1)) if i > 1 else L(1)
    if kind == "B":
        wt[r] = sub(add(L(r), L(r)), L(r - 1))
        wt[r + 1] = zero
    if kind == "D":
        wt[r - 1] = sub(add(L(r), L(r - 1)), L(r - 2))
        wt[r] = sub(L(r), L(r - 1))
    for i in range(1, r + 1):
        wt[bar(i)] = neg(wt[i])

    for i in range(1, r):
        f[(i, i)] = [(i + 1, 1)]
        f[(i, bar(i + 1))] = [(bar(i), 1)]
        e[(i, i + 1)] = [(i, 1)]
        e[(i, bar(i))] = [(bar(i + 1), 1)]
    if kind == "C":
        f[(r, r)] = [(bar(r), 1)]
        e[(r, bar(r))] = [(r, 1)]
    elif kind == "B":
        z = r + 1
        f[(r, r)] = [(z, 1)]
        f[(r, z)] = [(bar(r), 2)]
        e[(r, bar(r))] = [(z, 1)]
        e[(r, z)] = [(r, 2)]
    elif kind == "D":
        f[(r, r)] = [(bar(r - 1), 1)]
        f[(r, r - 1)] = [(bar(r), 1)]
        e[(r, bar(r))] = [(r - 1, 1)]
        e[(r, bar(r - 1))] = [(r, 1)]
    norms = {p: 1 for p in pos}
    if kind == "B":
        norms[r + 1] = 2
    return tuple(pos), wt, f, e, norms


def position_label(cd, p):
    r = cd.rank
    if cd.kind == "A" or p <= r:
        return str(p)
    if p == r + 1:
        return "0"
    return f"{2 * r + 2 - p}b"


# ------------------------------------------------------------ representations

@dataclass(frozen=True)
class Representation:
    """V(L_j) realised as a wedge power of V(L1) or as a spin module."""
    cd: CartanData
    j: int

    def __post_init__(self):
        if not 1 <= self.j <= self.cd.rank:
            raise UnsupportedRep(f"no fundamental index {self.j} for {self.cd}")

    @property
    def model(self):
        k, r, j = self.cd.kind, self.cd.rank, self.j
        if k in ("A", "C"):
            return "wedge"
        if k == "B":
            return "spin" if j == r else "wedge"
        return "spin" if j >= r - 1 else "wedge"

    def highest(self):
        r = self.cd.rank
        if self.model == "wedge":
            return tuple(range(1, self.j + 1))
        if self.cd.kind == "D" and self.j == r - 1:
            return (1,) * (r - 1) + (-1,)
        return (1,) * r

    def basis(self):
        r = self.cd.rank
        if self.model == "wedge":
            pos = vector_data(self.cd)[0]
            from itertools import combinations
            return [tuple(c) for c in combinations(pos, self.j)]
        out = []
        for signs in iproduct((1, -1), repeat=r):
            if self.cd.kind == "D":
                par = 1
                for s in signs:
                    par *= s
                if par != (1 if self.j == r else -1):
                    continue
            out.append(signs)
        return out

    def weight(self, b):
        r = self.cd.rank
        if self.model == "wedge":
            wt = vector_data(self.cd)[1]
            acc = [0] * r
            for p in b:
                for m, x in enumerate(wt[p]):
                    acc[m] += x
            return tuple(acc)
        w = [(b[i] - b[i + 1]) // 2 for i in range(r - 1)]
        if self.cd.kind == "B":
            w.append(b[r - 1])
        else:
            w.append((b[r - 2] + b[r - 1]) // 2)
        return tuple(w)

    def norm(self, b):
        if self.model == "spin":
            return 1
        norms = vector_data(self.cd)[4]
        out = 1
        for p in b:
            out *= norms[p]
        return out

    def label(self, b):
        if self.model == "wedge":
            return "^".join("v" + position_label(self.cd, p) for p in b)
        return "(" + ",".join("+" if s > 0 else "-" for s in b) + ")"

    # Lie algebra generators on basis elements
    def _spin_op(self, op, i, b):
        r = self.cd.rank
        b = list(b)
        if i < r:
            src, dst = ((1, -1), (-1, 1)) if op == "f" else ((-1, 1), (1, -1))
            if (b[i - 1], b[i]) == src:
                b[i - 1], b[i] = dst
                return [(tuple(b), 1)]
            return []
        if self.cd.kind == "B":
            if b[r - 1] == (1 if op == "f" else -1):
                b[r - 1] = -b[r - 1]
                return [(tuple(b), 1)]
            return []
        src = (1, 1) if op == "f" else (-1, -1)
        if (b[r - 2], b[r - 1]) == src:
            b[r - 2], b[r - 1] = -src[0], -src[1]
            return [(tuple(b), 1)]
        return []

    def exp_action(self, op, i, b):
        """exp(t X) b = sum_b' sum_d n[b'][d] t^d for X = e_i or f_i."""
        return _exp_action(self, op, i, b)


def _vector_exp(cd, op, i, p):
    """Divided powers X^k p / k! on V(L1) as {k: [(pos, int)]}."""
    table = vector_data(cd)[2 if op == "f" else 3]
    out = {0: [(p, 1)]}
    cur = {p: 1}
    k = 0
    while cur:
        k += 1
        nxt = {}
        for q, c in cur.items():
            for q2, c2 in table.get((i, q), ()):
                nxt[q2] = nxt.get(q2, 0) + c * c2
        cur = {q: c for q, c in nxt.items() if c}
        if cur:
            f = factorial(k)
            terms = []
            for q, c in cur.items():
                if c % f:
                    raise AssertionError("non-integral divided power")
                terms.append((q, c // f))
            out[k] = terms
    return out


def _sort_sign(seq):
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return None, 0
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return tuple(sorted(seq)), sign


@lru_cache(maxsize=None)
def _exp_action(rep, op, i, b):
    res = {}
    if rep.model == "spin":
        res[b] = {0: 1}
        for b2, c in rep._spin_op(op, i, b):
            res.setdefault(b2, {})
            res[b2][1] = res[b2].get(1, 0) + c
        return res
    pieces = [_vector_exp(rep.cd, op, i, p) for p in b]
    options = []
    for pc in pieces:
        opts = []
        for k, terms in pc.items():
            for q, c in terms:
                opts.append((q, k, c))
        options.append(opts)
    for choice in iproduct(*options):
        srt, sign = _sort_sign(q for q, _, _ in choice)
        if srt is None:
            continue
        d = sum(k for _, k, _ in choice)
        c = sign
        for _, _, x in choice:
            c *= x
        slot = res.setdefault(srt, {})
        slot[d] = slot.get(d, 0) + c
    return {b2: {d: c for d, c in v.items() if c} for b2, v in res.items() if any(v.values())}


# ------------------------------------------------------------ group factors

@dataclass(frozen=True)
class Lowering:
    """y_i(t) = exp(t f_i)."""
    i: int
    t: Union[LaurentPolynomial, int]


@dataclass(frozen=True)
class Raising:
    """x_i(t) = exp(t e_i)."""
    i: int
    t: Union[LaurentPolynomial, int]


@dataclass(frozen=True)
class Coweight:
    """alpha_i^vee(t), scaling a weight-mu vector by t^{mu(h_i)}."""
    i: int
    t: LaurentPolynomial


@dataclass(frozen=True)
class SBar:
    """x_i(-1) y_i(1) x_i(-1)."""
    i: int


@dataclass(frozen=True)
class Torus:
    """The formal torus element a."""


class RepVector:
    """Finite combination of basis elements with Laurent coefficients."""

    __slots__ = ("rep", "terms")

    def __init__(self, rep, terms=None):
        self.rep = rep
        self.terms = {b: c for b, c in (terms or {}).items() if c}

    @classmethod
    def basis_vector(cls, rep, b, coeff=None):
        r = rep.cd.rank
        if coeff is None:
            coeff = LaurentPolynomial.const(1, r)
        elif isinstance(coeff, int):
            coeff = LaurentPolynomial.const(coeff, r)
        return cls(rep, {b: coeff})

    def __add__(self, other):
        if other.rep != self.rep:
            raise RepMismatch("vectors live in different representations")
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out[b] + c if b in out else c
        return RepVector(self.rep, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return RepVector(self.rep, {b: x * c for b, x in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, RepVector) and self.rep == other.rep and self.terms == other.terms

    def coefficient(self, b):
        return self.terms.get(b, LaurentPolynomial.zero(self.rep.cd.rank))

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for b in sorted(self.terms):
            parts.append(f"({self.terms[b].render()})*{self.rep.label(b)}")
        return " + ".join(parts)

    __str__ = render

    def __repr__(self):
        return f"RepVector({self.render()})"


def _as_poly(t, r):
    if isinstance(t, int):
        return LaurentPolynomial.const(t, r)
    return t


def act_factor(cd, rep, f, v):
    """Apply one group factor to a RepVector of representation ``rep``."""
    if isinstance(rep, int):
        rep = Representation(cd, rep)
    if v.rep != rep:
        raise RepMismatch("vector does not belong to this representation")
    r = cd.rank
    out = {}

    def put(b, c):
        if b in out:
            s = out[b] + c
            if s:
                out[b] = s
            else:
                del out[b]
        elif c:
            out[b] = c

    if isinstance(f, (Lowering, Raising)):
        op = "f" if isinstance(f, Lowering) else "e"
        t = _as_poly(f.t, r)
        powers = {0: LaurentPolynomial.const(1, r)}
        for b, c in v.terms.items():
            for b2, degs in rep.exp_action(op, f.i, b).items():
                for d, n in degs.items():
                    if d not in powers:
                        powers[d] = t ** d
                    put(b2, c * powers[d] * n)
    elif isinstance(f, SBar):
        one = LaurentPolynomial.const(1, r)
        w = RepVector(rep, v.terms)
        w = act_factor(cd, rep, Raising(f.i, -1), w)
        w = act_factor(cd, rep, Lowering(f.i, one), w)
        w = act_factor(cd, rep, Raising(f.i, -1), w)
        return w
    elif isinstance(f, Coweight):
        t = _as_poly(f.t, r)
        for b, c in v.terms.items():
            put(b, c * t ** rep.weight(b)[f.i - 1])
    elif isinstance(f, Torus):
        for b, c in v.terms.items():
            put(b, c * apow(rep.weight(b), r))
    else:
        raise TypeError(f"unknown group factor {f!r}")
    return RepVector(rep, out)


def act_sequence(cd, rep, factors, v):
    """Apply factors so that the rightmost one acts first."""
    for f in reversed(list(factors)):
        v = act_factor(cd, rep, f, v)
    return v


def highest_vector(cd, j):
    rep = Representation(cd, j)
    return RepVector.basis_vector(rep, rep.highest())


def pairing(u, v):
    if u.rep != v.rep:
        raise RepMismatch("pairing across different representations")
    total = LaurentPolynomial.zero(u.rep.cd.rank)
    for b, c in u.terms.items():
        if b in v.terms:
            total = total + c * v.terms[b] * u.rep.norm(b)
    return total


def extremal_vector(cd, j, word):
    """w-bar u_{L_j} for w = s_{w1} s_{w2} ..., as (basis index, sign)."""
    rep = Representation(cd, j)
    v = highest_vector(cd, j)
    for i in reversed(tuple(word)):
        v = act_factor(cd, rep, SBar(i), v)
    if len(v.terms) != 1:
        raise AssertionError("extremal vector is not a basis line")
    (b, c), = v.terms.items()
    return b, _const(c)


def _const(c):
    if len(c.terms) == 1:
        (key, n), = c.terms.items()
        if key[0] == () and not any(key[1]):
            return n
    raise AssertionError("extremal vector coefficient is not a constant")
