"""Exact Laurent polynomials in the variables Y[s,i] with a torus weight.

A term is keyed by ``(y, aw)`` where ``y`` is a tuple of ``(s, i, e)``
triples sorted by ``(s, i)`` with ``e != 0`` and ``aw`` is the integer
coefficient vector of the torus character in the fundamental weights.
Sorting keys in tuple order gives the canonical monomial order.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from . import kernel
from .errors import NotDivisible


def _check_color(i, rank):
    if not 1 <= i <= rank:
        raise ValueError(f"color {i} outside [1, {rank}]")


def _merge(y1, y2):
    if not y1:
        return y2
    if not y2:
        return y1
    acc = dict(((s, i), e) for s, i, e in y1)
    for s, i, e in y2:
        v = acc.get((s, i), 0) + e
        if v:
            acc[(s, i)] = v
        else:
            del acc[(s, i)]
    return tuple((s, i, e) for (s, i), e in sorted(acc.items()))


class Monomial:
    """Laurent monomial in Y[s,i] times a^aw. Immutable."""

    __slots__ = ("y", "aw", "_hash")

    def __init__(self, y=(), aw=None, rank=None):
        if isinstance(y, Mapping):
            y = tuple((s, i, e) for (s, i), e in sorted(y.items()) if e)
        else:
            acc = {}
            for s, i, e in y:
                acc[(s, i)] = acc.get((s, i), 0) + e
            y = tuple((s, i, e) for (s, i), e in sorted(acc.items()) if e)
        if aw is None:
            if rank is None:
                raise ValueError("need aw or rank")
            aw = (0,) * rank
        aw = tuple(aw)
        for s, i, e in y:
            _check_color(i, len(aw))
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "aw", aw)
        object.__setattr__(self, "_hash", hash((y, aw)))

    def __setattr__(self, k, v):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def _raw(cls, y, aw):
        m = cls.__new__(cls)
        object.__setattr__(m, "y", y)
        object.__setattr__(m, "aw", aw)
        object.__setattr__(m, "_hash", hash((y, aw)))
        return m

    @property
    def rank(self):
        return len(self.aw)

    @property
    def key(self):
        return (self.y, self.aw)

    def exps(self):
        return {(s, i): e for s, i, e in self.y}

    def degree(self, s, i):
        for s2, i2, e in self.y:
            if (s2, i2) == (s, i):
                return e
        return 0

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial._raw(_merge(self.y, other.y),
                             tuple(a + b for a, b in zip(self.aw, other.aw)))

    def __truediv__(self, other):
        return self * other.inverse()

    def inverse(self):
        return Monomial._raw(tuple((s, i, -e) for s, i, e in self.y),
                             tuple(-a for a in self.aw))

    def __pow__(self, k):
        return Monomial._raw(tuple((s, i, e * k) for s, i, e in self.y if e * k),
                             tuple(a * k for a in self.aw))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.y == other.y and self.aw == other.aw

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def is_one(self):
        return not self.y and not any(self.aw)

    def strip_aweight(self):
        return Monomial._raw(self.y, (0,) * len(self.aw))

    def substitute(self, images):
        """Replace each Y[s,i] by ``images[(s,i)]`` (a Monomial) if present."""
        out = Monomial._raw((), self.aw)
        for s, i, e in self.y:
            img = images.get((s, i))
            if img is None:
                out = out * Monomial._raw(((s, i, e),), (0,) * len(self.aw))
            else:
                out = out * img ** e
        return out

    def render(self):
        parts = []
        w = render_aweight(self.aw)
        if w:
            parts.append(w)
        ys = render_y(self.y)
        if ys:
            parts.append(ys)
        return "*".join(parts) if parts else "1"

    __str__ = render

    def __repr__(self):
        return f"Monomial({self.render()})"


def render_y(y):
    pos = [(s, i, e) for s, i, e in y if e > 0]
    neg = [(s, i, e) for s, i, e in y if e < 0]
    out = []
    for s, i, e in pos + neg:
        out.append(f"Y[{s},{i}]" if e == 1 else f"Y[{s},{i}]^{e}")
    return "*".join(out)


def render_aweight(aw):
    bits = []
    for i, c in enumerate(aw, start=1):
        if c == 0:
            continue
        if c == 1:
            t = f"L{i}"
        elif c == -1:
            t = f"-L{i}"
        else:
            t = f"{c}*L{i}"
        bits.append(t)
    if not bits:
        return ""
    return "a^{" + "+".join(bits).replace("+-", "-") + "}"


class LaurentPolynomial:
    """Finite Z-combination of Monomials of a fixed rank. Immutable."""

    __slots__ = ("terms", "rank", "_hash", "_skey")

    def __init__(self, terms=None, rank=None):
        if rank is None:
            raise ValueError("rank is required")
        t = {}
        if terms:
            for k, c in terms.items():
                if isinstance(k, Monomial):
                    k = k.key
                if c:
                    t[k] = t.get(k, 0) + c
            t = {k: c for k, c in t.items() if c}
        object.__setattr__(self, "terms", t)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_skey", None)

    def __setattr__(self, k, v):
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def _raw(cls, terms, rank):
        p = cls.__new__(cls)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "rank", rank)
        object.__setattr__(p, "_hash", None)
        object.__setattr__(p, "_skey", None)
        return p

    # constructors
    @classmethod
    def zero(cls, rank):
        return cls._raw({}, rank)

    @classmethod
    def const(cls, c, rank):
        return cls._raw({((), (0,) * rank): c} if c else {}, rank)

    @classmethod
    def from_monomial(cls, m, coeff=1):
        return cls._raw({m.key: coeff} if coeff else {}, m.rank)

    # basic queries
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """(Monomial, coeff) pairs in canonical order."""
        return [(Monomial._raw(y, aw), c) for (y, aw), c in sorted(self.terms.items())]

    def monomials(self):
        return [m for m, _ in self.items()]

    def coefficient(self, m):
        return self.terms.get(m.key, 0)

    def aweights(self):
        return {aw for _, aw in self.terms}

    def is_homogeneous(self):
        return len(self.aweights()) <= 1

    def aweight(self):
        """The common torus weight; raises if not homogeneous."""
        ws = self.aweights()
        if len(ws) != 1:
            raise ValueError("polynomial is not homogeneous")
        return next(iter(ws))

    def is_monomial(self):
        return len(self.terms) == 1

    def leading(self):
        k = max(self.terms)
        return Monomial._raw(*k), self.terms[k]

    def strip_aweight(self):
        z = (0,) * self.rank
        out = {}
        for (y, _), c in self.terms.items():
            out[(y, z)] = out.get((y, z), 0) + c
        return LaurentPolynomial._raw({k: v for k, v in out.items() if v}, self.rank)

    def sort_key(self):
        if self._skey is None:
            object.__setattr__(self, "_skey", tuple(sorted(self.terms.items())))
        return self._skey

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.rank != self.rank:
                raise ValueError("rank mismatch")
            return other
        if isinstance(other, Monomial):
            return LaurentPolynomial.from_monomial(other)
        if isinstance(other, int):
            return LaurentPolynomial.const(other, self.rank)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPolynomial._raw(out, self.rank)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({k: -c for k, c in self.terms.items()}, self.rank)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers exist only for monomials")
            m, c = self.leading()
            if c not in (1, -1):
                raise ValueError("negative power of a non-unit coefficient")
            return LaurentPolynomial.from_monomial(m ** k, c ** (-k))
        result = LaurentPolynomial.const(1, self.rank)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return poly_divide_exact(self, other)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.const(other, self.rank)
        if isinstance(other, Monomial):
            other = LaurentPolynomial.from_monomial(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    # evaluation (used by property tests)
    def evaluate(self, point, torus=None):
        total = Fraction(0)
        for (y, aw), c in self.terms.items():
            v = Fraction(c)
            for s, i, e in y:
                v *= Fraction(point[(s, i)]) ** e
            if torus is not None:
                for t, k in zip(torus, aw):
                    v *= Fraction(t) ** k
            total += v
        return total

    # rendering
    def render(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items())
        ws = self.aweights()
        if len(ws) == 1:
            aw = next(iter(ws))
            body = _render_sum([(render_y(y), c) for (y, _), c in items])
            w = render_aweight(aw)
            if not w:
                return body
            if len(items) == 1 and items[0][1] == 1 and not items[0][0][0]:
                return w
            if len(items) == 1 and items[0][1] > 0:
                return f"{w}*{body}"
            return f"{w}*({body})"
        return _render_sum([(Monomial._raw(y, aw).render() if (y or any(aw)) else "", c)
                            for (y, aw), c in items])

    __str__ = render

    def __repr__(self):
        return f"LaurentPolynomial({self.render()})"

    def to_json(self):
        return [{"coeff": c, "aweight": list(aw), "exps": [[s, i, e] for s, i, e in y]}
                for (y, aw), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data, rank=None):
        if rank is None:
            if not data:
                raise ValueError("rank is required for the empty polynomial")
            rank = len(data[0]["aweight"])
        terms = {}
        for t in data:
            m = Monomial([tuple(x) for x in t["exps"]], t["aweight"])
            if m.rank != rank:
                raise ValueError("aweight length does not match rank")
            terms[m.key] = terms.get(m.key, 0) + int(t["coeff"])
        return cls(terms, rank)


def _render_sum(pairs):
    out = []
    for idx, (m, c) in enumerate(pairs):
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = m
        else:
            body = f"{a}*{m}"
        if idx == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


# ---------------------------------------------------------------- helpers

def Y(s, i, rank, power=1):
    """The variable Y[s,i]; colors 0 and > rank denote the constant 1."""
    if i == 0 or i > rank:
        return LaurentPolynomial.const(1, rank)
    if i < 0:
        raise ValueError("negative color")
    if power == 0:
        return LaurentPolynomial.const(1, rank)
    return LaurentPolynomial._raw({(((s, i, power),), (0,) * rank): 1}, rank)


def ymono(rank, *factors):
    """Monomial from ``(s, i, e)`` triples, dropping colors 0 and > rank."""
    acc = {}
    for s, i, e in factors:
        if i == 0 or i > rank:
            continue
        acc[(s, i)] = acc.get((s, i), 0) + e
    return Monomial(acc, rank=rank)


def apow(weight, rank):
    """The torus character a^weight as a polynomial."""
    return LaurentPolynomial._raw({((), tuple(weight)): 1}, rank)


def fundamental(k, rank, mult=1):
    """Coefficient vector of mult*L_k (with L_0 = 0)."""
    w = [0] * rank
    if 1 <= k <= rank:
        w[k - 1] = mult
    return tuple(w)


def add_weights(*ws):
    return tuple(sum(c) for c in zip(*ws))


# ---------------------------------------------------------------- kernels

def _layout(*polys):
    vs = set()
    for p in polys:
        for y, _ in p.terms:
            for s, i, _e in y:
                vs.add((s, i))
    vs = sorted(vs)
    return vs, {v: n for n, v in enumerate(vs)}


def _dense(p, index, nv):
    out = {}
    for (y, aw), c in p.terms.items():
        row = [0] * nv
        for s, i, e in y:
            row[index[(s, i)]] = e
        out[tuple(row) + aw] = c
    return out


def _sparse(d, vs, rank):
    nv = len(vs)
    out = {}
    for row, c in d.items():
        y = tuple((v[0], v[1], e) for v, e in zip(vs, row[:nv]) if e)
        out[(y, tuple(row[nv:]))] = c
    return out


def poly_mul(p, q):
    """Product of two Laurent polynomials."""
    if p.rank != q.rank:
        raise ValueError("rank mismatch")
    if not p.terms or not q.terms:
        return LaurentPolynomial.zero(p.rank)
    if len(q.terms) == 1:
        p, q = q, p
    if len(p.terms) == 1:
        ((y1, a1), c1), = p.terms.items()
        out = {}
        for (y2, a2), c2 in q.terms.items():
            out[(_merge(y1, y2), tuple(x + z for x, z in zip(a1, a2)))] = c1 * c2
        return LaurentPolynomial._raw(out, p.rank)
    vs, index = _layout(p, q)
    d = kernel.mul_dense(_dense(p, index, len(vs)), _dense(q, index, len(vs)))
    return LaurentPolynomial._raw(_sparse(d, vs, p.rank), p.rank)


def poly_divide_exact(n, d):
    """Quotient q with q*d == n; raises NotDivisible otherwise."""
    if n.rank != d.rank:
        raise ValueError("rank mismatch")
    if not d.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not n.terms:
        return LaurentPolynomial.zero(n.rank)
    if len(d.terms) == 1:
        ((y1, a1), c1), = d.terms.items()
        inv_y = tuple((s, i, -e) for s, i, e in y1)
        out = {}
        for (y2, a2), c2 in n.terms.items():
            qc, r = divmod(c2, c1)
            if r:
                raise NotDivisible("coefficient not divisible by monomial coefficient")
            out[(_merge(y2, inv_y), tuple(x - z for x, z in zip(a2, a1)))] = qc
        return LaurentPolynomial._raw(out, n.rank)
    vs, index = _layout(n, d)
    q = kernel.div_dense(_dense(n, index, len(vs)), _dense(d, index, len(vs)))
    return LaurentPolynomial._raw(_sparse(q, vs, n.rank), n.rank)


def support(p):
    """Set of monomials of p together with the coefficient map."""
    coeffs = {Monomial._raw(y, aw): c for (y, aw), c in p.terms.items()}
    return set(coeffs), coeffs


def product(factors, rank):
    out = LaurentPolynomial.const(1, rank)
    for f in factors:
        out = out * f
    return out


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<y>Y\[\s*-?\d+\s*,\s*\d+\s*\])|(?P<a>a\^\{[^}]*\})|(?P<op>[-+*/()^]))")


def _tokens(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse near {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
    return out


def _parse_weight(body, rank):
    w = [0] * rank
    body = body.replace(" ", "")
    if not body:
        return tuple(w)
    for sign, coef, idx in re.findall(r"([+-]?)(?:(\d+)\*)?L(\d+)", body):
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        i = int(idx)
        _check_color(i, rank)
        w[i - 1] += c
    return tuple(w)


def parse_polynomial(text, rank):
    """Parse the text rendering (also plain sums/products of Y's and a's)."""
    toks = _tokens(text)
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else (None, None)

    def take():
        t = peek()
        pos[0] += 1
        return t

    def expr():
        sign = 1
        k, v = peek()
        if k == "op" and v in "+-":
            take()
            sign = -1 if v == "-" else 1
        acc = term() * sign
        while True:
            k, v = peek()
            if k == "op" and v in "+-":
                take()
                t = term()
                acc = acc + t if v == "+" else acc - t
            else:
                return acc

    def term():
        acc = factor()
        while True:
            k, v = peek()
            if k == "op" and v == "*":
                take()
                acc = acc * factor()
            elif k == "op" and v == "/":
                # exact division; a non-monomial divisor must divide evenly
                take()
                acc = poly_divide_exact(acc, factor())
            else:
                return acc

    def exponent():
        k, v = peek()
        if k == "op" and v == "^":
            take()
            sgn = 1
            k, v = peek()
            if k == "op" and v == "-":
                take()
                sgn = -1
            k, v = take()
            if k != "int":
                raise ValueError("expected integer exponent")
            return sgn * int(v)
        return 1

    def factor():
        k, v = take()
        if k == "int":
            return LaurentPolynomial.const(int(v), rank)
        if k == "y":
            s, i = (int(x) for x in v[2:-1].split(","))
            _check_color(i, rank)
            return Y(s, i, rank) ** exponent()
        if k == "a":
            return apow(_parse_weight(v[3:-1], rank), rank)
        if k == "op" and v == "(":
            e = expr()
            k2, v2 = take()
            if v2 != ")":
                raise ValueError("unbalanced parentheses")
            return e ** exponent() if peek() == ("op", "^") else e
        raise ValueError(f"unexpected token {v!r}")

    out = expr()
    if pos[0] != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return out


def parse_monomial(text, rank):
    p = parse_polynomial(text, rank)
    if not p.is_monomial() or p.leading()[1] != 1:
        raise ValueError(f"{text!r} is not a monomial")
    return p.leading()[0]
