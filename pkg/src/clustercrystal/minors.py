"""Generalized minors on the factorized chart and the initial seed."""
from __future__ import annotations

import logging
from fractions import Fraction

from .errors import InvariantViolation
from .laurent import LaurentPolynomial, Monomial, Y, apow, fundamental
from .reps import (Coweight, Lowering, Raising, Representation, RepVector, Torus,
                   act_factor, extremal_vector, highest_vector, pairing)
from .roots import CartanData, ReducedWord, coxeter_square_word, e_and_kminus, word_suffix

log = logging.getLogger(__name__)

# (type, rank, j, weyl word, chart word) -> sign applied during normalization
SIGN_LOG = {}


def chart_parameters(cd, word):
    """Pair each letter of ``word`` (left to right) with its chart variable.

    For the doubled Coxeter word this is Y[1,r..1] followed by Y[2,r..1];
    in general the m-th occurrence of a letter i uses Y[m,i].
    """
    seen = {}
    out = []
    for i in word:
        seen[i] = seen.get(i, 0) + 1
        out.append((i, Y(seen[i], i, cd.rank)))
    return out


def omega_chart_factors(cd, word):
    """Factors of omega(g) for g = a * prod x_i(t) alpha_i^vee(t), leftmost first."""
    params = chart_parameters(cd, word)
    factors = []
    for i, t in reversed(params):
        factors.append(Coweight(i, t))
        factors.append(Lowering(i, t))
    factors.append(Torus())
    return factors


def chart_image(cd, word, j):
    """omega(g) u_{L_j} on the chart, as a RepVector."""
    rep = Representation(cd, j)
    v = highest_vector(cd, j)
    for f in reversed(omega_chart_factors(cd, word)):
        v = act_factor(cd, rep, f, v)
    return v


_IMAGE_CACHE = {}


def _cached_image(cd, word, j):
    key = (cd, tuple(word), j)
    if key not in _IMAGE_CACHE:
        _IMAGE_CACHE[key] = chart_image(cd, word, j)
    return _IMAGE_CACHE[key]


def evaluate_minor_signed(cd, word, j, w):
    """(Delta_{L_j, w L_j} on the chart after sign normalization, sign used)."""
    if not isinstance(word, ReducedWord):
        word = ReducedWord(word)
    rep = Representation(cd, j)
    b, sign = extremal_vector(cd, j, w)
    img = _cached_image(cd, word.letters, j)
    ext = RepVector.basis_vector(rep, b, sign)
    val = pairing(ext, img)
    if not val:
        return val, 1
    lead_sign = 1 if val.leading()[1] > 0 else -1
    if lead_sign < 0:
        val = -val
        log.info("negated minor %s j=%d w=%s", cd, j, w)
    SIGN_LOG[(cd.kind, cd.rank, j, tuple(w), word.letters)] = lead_sign
    if val.aweights() != {fundamental(j, cd.rank)}:
        raise InvariantViolation("minor is not homogeneous of weight L_j")
    return val, lead_sign


def evaluate_minor(cd, word, j, w):
    return evaluate_minor_signed(cd, word, j, w)[0]


# ---------------------------------------------------------------- seeds

def initial_variables(cd, word=None):
    """Variables x_k for k in [-1,-r] and [1,n] on the chart.

    x_k (k >= 1) is Delta_{L_{j_k}, s_{j_1} ... s_{j_{k-1}} L_{j_k}} and
    x_{-i} is Delta_{L_i, s_{j_1} ... s_{j_n} L_i}.
    """
    if word is None:
        word = coxeter_square_word(cd)
    n = word.n
    out = {}
    for k in range(1, n + 1):
        jk = word.j(k)
        out[k] = evaluate_minor(cd, word, jk, word_suffix(word, n - k + 1))
    for i in range(1, cd.rank + 1):
        out[-i] = evaluate_minor(cd, word, i, word_suffix(word, 0))
    return out


def initial_seed(cd, word=None):
    from .cluster import Seed, initial_exchange_matrix
    if word is None:
        word = coxeter_square_word(cd)
    if not isinstance(word, ReducedWord):
        word = ReducedWord(word)
    if not cd.is_reduced(word.letters):
        raise ValueError(f"{word.letters} is not a reduced word in type {cd}")
    e, _ = e_and_kminus(word, cd.rank)
    vars_ = initial_variables(cd, word)
    return Seed(cd, vars_, initial_exchange_matrix(cd, word), frozenset(e), word=word)


# ---------------------------------------------------------------- checks

def commutation_check(cd, i, j, s=None, t=None):
    """alpha_i^vee(s) x_j(t) == x_j(s^{a_ij} t) alpha_i^vee(s) on V(L1)."""
    r = cd.rank
    s = s if s is not None else Y(7, 1, r)
    t = t if t is not None else Y(8, 1, r)
    rep = Representation(cd, 1)
    aij = cd.a(i, j)
    for b in rep.basis():
        v = RepVector.basis_vector(rep, b)
        lhs = act_factor(cd, rep, Coweight(i, s), act_factor(cd, rep, Raising(j, t), v))
        rhs = act_factor(cd, rep, Raising(j, s ** aij * t), act_factor(cd, rep, Coweight(i, s), v))
        if lhs != rhs:
            return False
    return True


def lowering_commutation_check(cd, i, j, s=None, t=None):
    """alpha_i^vee(s) y_j(t) == y_j(s^{-a_ij} t) alpha_i^vee(s) on V(L1)."""
    r = cd.rank
    s = s if s is not None else Y(7, 1, r)
    t = t if t is not None else Y(8, 1, r)
    rep = Representation(cd, 1)
    aij = cd.a(i, j)
    for b in rep.basis():
        v = RepVector.basis_vector(rep, b)
        lhs = act_factor(cd, rep, Coweight(i, s), act_factor(cd, rep, Lowering(j, t), v))
        rhs = act_factor(cd, rep, Lowering(j, s ** (-aij) * t), act_factor(cd, rep, Coweight(i, s), v))
        if lhs != rhs:
            return False
    return True


# Factorization maps for type C. A point is (torus, Y) where the torus is
# recorded by its characters: torus[k] = h^{L_{k+1}} as a Monomial, and
# Y maps (s, l) to a Monomial.

def _ymon(r, s, l):
    if l == 0 or l > r:
        return Monomial(rank=r)
    return Monomial({(s, l): 1}, rank=r)


def phi_map(r, torus, yv):
    """Forward change of coordinates on the type C chart."""
    one = Monomial(rank=r)
    get = lambda s, l: yv.get((s, l), one) if 1 <= l <= r else one
    out = {}
    for l in range(1, r + 1):
        if l < r:
            out[(2, l)] = get(2, l - 1) / get(2, l)
            out[(1, l)] = get(1, l - 1) * get(2, l - 1) * get(2, l + 1) / (get(1, l) * get(2, l) ** 2)
        else:
            out[(2, l)] = get(2, r - 1) ** 2 / get(2, r)
            out[(1, l)] = get(1, r - 1) ** 2 * get(2, r - 1) ** 2 / (get(1, r) * get(2, r) ** 2)
    # Phi_H = a * prod_{i,j} alpha_i^vee(Y_{j,i}); its L_k character picks Y_{j,k}
    new_torus = [torus[k - 1] * get(1, k) * get(2, k) for k in range(1, r + 1)]
    return new_torus, out


def psi_map(r, torus, yv):
    """Inverse change of coordinates on the type C chart."""
    one = Monomial(rank=r)
    get = lambda s, l: yv.get((s, l), one) if 1 <= l <= r else one
    psi2 = {0: one}
    acc = one
    for l in range(1, r + 1):
        if l < r:
            acc = acc * get(2, l)
            psi2[l] = acc.inverse()
        else:
            prod_ = one
            for m in range(1, r):
                prod_ = prod_ * get(2, m)
            psi2[r] = (prod_ ** 2 * get(2, r)).inverse()
    p2 = lambda l: psi2.get(l, one) if 0 <= l <= r else one
    psi1 = {0: one}
    for l in range(1, r + 1):
        if l < r:
            psi1[l] = psi1[l - 1] * p2(l - 1) * p2(l + 1) / (p2(l) ** 2 * get(1, l))
        else:
            psi1[r] = psi1[r - 1] ** 2 * p2(r - 1) ** 2 / (p2(r) ** 2 * get(1, r))
    out = {}
    for l in range(1, r + 1):
        out[(1, l)] = psi1[l]
        out[(2, l)] = psi2[l]
    new_torus = [torus[k - 1] / (psi1[k] * psi2[k]) for k in range(1, r + 1)]
    return new_torus, out


def factorization_roundtrip(r, torus=None, yv=None):
    """psi(phi(a;Y)) == (a;Y) for type C_r, symbolically or at a point."""
    if torus is None:
        torus = [Monomial(aw=fundamental(k, r)) for k in range(1, r + 1)]
    if yv is None:
        yv = {(s, l): _ymon(r, s, l) for s in (1, 2) for l in range(1, r + 1)}
    t1, y1 = phi_map(r, torus, yv)
    t2, y2 = psi_map(r, t1, y1)
    return t2 == list(torus) and y2 == yv


def _eval_mono(m, point, tvals):
    v = Fraction(1)
    for s, i, e in m.y:
        v *= Fraction(point[(s, i)]) ** e
    for t, k in zip(tvals, m.aw):
        v *= Fraction(t) ** k
    return v


def factorization_roundtrip_numeric(r, point, tvals):
    """Evaluate psi(phi(a;Y)) at rational numbers and compare."""
    torus = [Monomial(aw=fundamental(k, r)) for k in range(1, r + 1)]
    yv = {(s, l): _ymon(r, s, l) for s in (1, 2) for l in range(1, r + 1)}
    t1, y1 = phi_map(r, torus, yv)
    t2, y2 = psi_map(r, t1, y1)
    for key in yv:
        if _eval_mono(y2[key], point, tvals) != Fraction(point[key]):
            return False
    for k in range(r):
        if _eval_mono(t2[k], point, tvals) != Fraction(tvals[k]):
            return False
    return True
