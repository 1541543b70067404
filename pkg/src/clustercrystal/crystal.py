"""Monomial realization of crystals and Demazure crystals.

Crystal elements are Monomials with zero torus weight. The realization is
the one attached to the cyclic sequence (r, ..., 2, 1), so p_{j,i} = 1
exactly when j > i.
"""
from __future__ import annotations

from collections import deque

from .errors import BudgetExceeded, NotHighest
from .laurent import Monomial
from .roots import CartanData


class PMatrix:
    """p_{j,i} in {0,1}; only the realization from (r, ..., 1) is accepted."""

    def __init__(self, rank, sequence=None):
        seq = tuple(sequence) if sequence is not None else tuple(range(rank, 0, -1))
        if seq != tuple(range(rank, 0, -1)):
            raise ValueError("only the cyclic sequence (r, ..., 2, 1) is supported")
        self.rank = rank
        self.sequence = seq

    def __call__(self, j, i):
        if j == i:
            raise ValueError("p is defined for j != i")
        return 1 if j > i else 0


def default_p(cd):
    return PMatrix(cd.rank)


def _zeta(m, i):
    """Sorted (s, exponent) pairs of color i."""
    return [(s, e) for s, c, e in m.y if c == i]


def weight(m, rank):
    w = [0] * rank
    for _, i, e in m.y:
        w[i - 1] += e
    return tuple(w)


def phi_eps(m, i):
    """(phi_i, eps_i, n_f, n_e) for monomial m and color i.

    With sigma_s = sum_{k <= s} y_{k,i}, n_f is the least and n_e the largest
    s where sigma_s is maximal (s ranges over all integers, so n_e sits just
    before the next nonzero entry). n_e is None when eps_i = 0.
    """
    z = _zeta(m, i)
    total = 0
    best = 0
    n_f = None
    last = None   # position in z of the last entry where the max is reached
    for pos, (s, e) in enumerate(z):
        total += e
        if total > best:
            best = total
            n_f = s
            last = pos
        elif total == best:
            last = pos
    eps = best - total
    n_e = None
    if eps > 0:
        # the prefix sum stays maximal until the entry following `last`
        nxt = 0 if last is None else last + 1
        n_e = z[nxt][0] - 1
    return best, eps, n_f, n_e


def crystal_stats(cd, m):
    """(wt, phi, eps) with phi and eps indexed by color 1..r."""
    r = cd.rank
    wt = weight(m, r)
    phi = []
    eps = []
    for i in range(1, r + 1):
        p, e, _, _ = phi_eps(m, i)
        phi.append(p)
        eps.append(e)
    return wt, tuple(phi), tuple(eps)


def a_si(cd, p, s, i):
    """A_{s,i} = Y_{s,i} Y_{s+1,i} prod_{j != i} Y_{s+p_{j,i}, j}^{a_{j,i}}."""
    r = cd.rank
    acc = {(s, i): 1}
    acc[(s + 1, i)] = acc.get((s + 1, i), 0) + 1
    for j in range(1, r + 1):
        if j == i:
            continue
        a = cd.a(j, i)
        if a:
            key = (s + p(j, i), j)
            acc[key] = acc.get(key, 0) + a
    return Monomial(acc, rank=r)


def kashiwara_f(cd, p, i, m):
    ph, _, n_f, _ = phi_eps(m, i)
    if ph == 0:
        return None
    return m * a_si(cd, p, n_f, i).inverse()


def kashiwara_e(cd, p, i, m):
    ph, ep, _, n_e = phi_eps(m, i)
    if ep == 0:
        return None
    return m * a_si(cd, p, n_e, i)


def is_highest(cd, m):
    return all(e == 0 for e in crystal_stats(cd, m)[2])


def f_string(cd, p, i, m):
    """[m, f m, f^2 m, ...] until f returns None."""
    out = [m]
    while True:
        nxt = kashiwara_f(cd, p, i, out[-1])
        if nxt is None:
            return out
        out.append(nxt)


def demazure_monomials(cd, p, highest, word):
    """Monomials of the Demazure crystal for s_{w1} s_{w2} ... applied to highest."""
    if not is_highest(cd, highest):
        raise NotHighest(f"{highest.render()} is not a highest monomial")
    cur = {highest}
    for i in reversed(tuple(word)):
        nxt = set()
        for m in cur:
            nxt.update(f_string(cd, p, i, m))
        cur = nxt
    return cur


def demazure_paths(cd, p, highest, word):
    """Number of distinct f-string paths f^{a1}_{w1}...f^{an}_{wn} u reaching each monomial.

    Two different exponent vectors can land on the same crystal element, so
    this is an upper bound, not a multiplicity; see demazure_elements.
    """
    cur = {highest: 1}
    for i in reversed(tuple(word)):
        nxt = {}
        for m, c in cur.items():
            for x in f_string(cd, p, i, m):
                nxt[x] = nxt.get(x, 0) + c
        cur = nxt
    return cur


def crystal_component(cd, p, seed, cap=200000):
    """Connected component of seed: (vertices, edges (m, i, f_i m))."""
    seen = {seed}
    queue = deque([seed])
    edges = set()
    while queue:
        m = queue.popleft()
        for i in range(1, cd.rank + 1):
            f = kashiwara_f(cd, p, i, m)
            if f is not None:
                edges.add((m, i, f))
                if f not in seen:
                    seen.add(f)
                    queue.append(f)
            e = kashiwara_e(cd, p, i, m)
            if e is not None:
                edges.add((e, i, m))
                if e not in seen:
                    seen.add(e)
                    queue.append(e)
        if len(seen) > cap:
            raise BudgetExceeded(f"crystal component exceeds {cap} vertices")
    return seen, edges


def component_dot(cd, vertices, edges, name="crystal"):
    lines = [f"digraph {name} {{"]
    ids = {m: f"n{k}" for k, m in enumerate(sorted(vertices))}
    for m, k in ids.items():
        lines.append(f'  {k} [label="{m.render()}"];')
    for a, i, b in sorted(edges, key=lambda t: (t[0].key, t[1], t[2].key)):
        lines.append(f'  {ids[a]} -> {ids[b]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)


# ------------------------------------------------------------ character oracle

def demazure_character(cd, lam, word):
    """Demazure character via the operators D_i, as {weight: multiplicity}.

    D_i(e^mu) = (e^mu - e^{s_i mu - alpha_i}) / (1 - e^{-alpha_i}); applied
    rightmost letter first. Independent of the monomial realization.
    """
    char = {tuple(lam): 1}
    for i in reversed(tuple(word)):
        al = cd.simple_root(i)
        out = {}
        for mu, c in char.items():
            n = mu[i - 1]
            if n >= 0:
                for k in range(n + 1):
                    nu = tuple(x - k * y for x, y in zip(mu, al))
                    out[nu] = out.get(nu, 0) + c
            elif n < -1:
                for k in range(1, -n):
                    nu = tuple(x + k * y for x, y in zip(mu, al))
                    out[nu] = out.get(nu, 0) - c
        char = {k: v for k, v in out.items() if v}
    return char
