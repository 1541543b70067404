"""Cartan data, reduced words and root counting for classical types."""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import IndexOutOfRange

KINDS = ("A", "B", "C", "D")


def cartan_matrix(kind, r):
    """a[i][j] = alpha_j(h_i), 0-indexed lists."""
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
    for i in range(r - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if kind == "C":
        a[r - 2][r - 1] = -2
    elif kind == "B":
        a[r - 1][r - 2] = -2
    elif kind == "D":
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
    return a


@dataclass(frozen=True)
class CartanData:
    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown type {self.kind!r}")
        lo = 3 if self.kind == "D" else 2
        if self.rank < lo:
            raise ValueError(f"type {self.kind} needs rank >= {lo}")

    @classmethod
    def parse(cls, text, rank=None):
        """Accept 'B3', 'B 3' or ('B', 3)."""
        if rank is None:
            m = re.fullmatch(r"\s*([ABCDabcd])\s*(\d+)\s*", text)
            if not m:
                raise ValueError(f"cannot parse Cartan type {text!r}")
            return cls(m.group(1).upper(), int(m.group(2)))
        return cls(text.upper(), int(rank))

    def __str__(self):
        return f"{self.kind}{self.rank}"

    @cached_property
    def matrix(self):
        return tuple(tuple(row) for row in cartan_matrix(self.kind, self.rank))

    def a(self, i, j):
        """Cartan entry a_{i,j} with 1-based indices."""
        return self.matrix[i - 1][j - 1]

    def symmetrizer(self):
        """Positive integer diagonal d with d_i a_ij = d_j a_ji, or None."""
        r = self.rank
        d = [None] * r
        d[0] = Fraction(1)
        queue = [0]
        while queue:
            i = queue.pop()
            for j in range(r):
                if j != i and self.matrix[i][j] != 0:
                    if self.matrix[j][i] == 0:
                        return None
                    val = d[i] * self.matrix[i][j] / self.matrix[j][i]
                    if d[j] is None:
                        d[j] = val
                        queue.append(j)
                    elif d[j] != val:
                        return None
        den = 1
        for x in d:
            den = den * x.denominator // _gcd(den, x.denominator)
        out = [int(x * den) for x in d]
        if any(x <= 0 for x in out):
            return None
        return tuple(out)

    # weights are coefficient tuples in the fundamental-weight basis
    def simple_root(self, j):
        """alpha_j = sum_i a_{ij} L_i."""
        return tuple(self.matrix[i][j - 1] for i in range(self.rank))

    def reflect_weight(self, i, lam):
        c = lam[i - 1]
        al = self.simple_root(i)
        return tuple(x - c * y for x, y in zip(lam, al))

    def act_word_on_weight(self, word, lam):
        """Apply s_{w1} s_{w2} ... to lam (rightmost letter first)."""
        for i in reversed(tuple(word)):
            lam = self.reflect_weight(i, lam)
        return tuple(lam)

    def positive_roots(self):
        """Positive roots in simple-root coordinates, by reflection closure."""
        r = self.rank
        simple = [tuple(1 if k == j else 0 for k in range(r)) for j in range(r)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(r):
                # <beta, alpha_i^vee> = sum_j beta_j a_{ij}
                c = sum(beta[j] * self.matrix[i][j] for j in range(r))
                img = tuple(beta[k] - (c if k == i else 0) for k in range(r))
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        pos = [b for b in seen if all(x >= 0 for x in b)]
        neg = [b for b in seen if all(x <= 0 for x in b)]
        if len(pos) + len(neg) != len(seen):
            raise AssertionError("root with mixed signs")
        return sorted(pos)

    def reflect_root(self, i, beta):
        """s_i on a root in simple-root coordinates."""
        c = sum(beta[j] * self.matrix[i - 1][j] for j in range(self.rank))
        return tuple(b - (c if k == i - 1 else 0) for k, b in enumerate(beta))

    def is_reduced(self, word):
        """True iff s_{w1} ... s_{wn} is a reduced expression."""
        letters = tuple(word)
        for t, i in enumerate(letters):
            # s_{w1} ... s_{w(t-1)} (alpha_i) must be positive
            beta = tuple(1 if k == i - 1 else 0 for k in range(self.rank))
            for m in reversed(letters[:t]):
                beta = self.reflect_root(m, beta)
            if not all(x >= 0 for x in beta):
                return False
        return True

    def almost_positive_count(self):
        return len(self.positive_roots()) + self.rank


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def almost_positive_count(cd):
    return cd.almost_positive_count()


class ReducedWord:
    """Word (i_1, ..., i_n) read left to right; j_k is the k-th letter from the right."""

    def __init__(self, letters):
        self.letters = tuple(int(x) for x in letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, ReducedWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"ReducedWord{self.letters}"

    @property
    def n(self):
        return len(self.letters)

    def j(self, k):
        """j_k for k in [1, n]; j_{-k} = -k for the frozen prefix."""
        if k < 0:
            return k
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"position {k} outside [1, {self.n}]")
        return self.letters[self.n - k]

    def suffix(self, k):
        return word_suffix(self, k)


def coxeter_square_word(cd):
    r = cd.rank
    return ReducedWord(tuple(range(r, 0, -1)) * 2)


def word_suffix(w, k):
    """v_{>k} as the letter sequence (j_1, j_2, ..., j_{n-k})."""
    if not 0 <= k <= w.n:
        raise IndexOutOfRange(f"k={k} outside [0, {w.n}]")
    return tuple(w.j(m) for m in range(1, w.n - k + 1))


def e_and_kminus(w, r=None):
    """Return (e(i), kminus) where kminus maps indices in [-1,-r] and [1,n]."""
    if r is None:
        r = max(w.letters) if w.letters else 0
    n = w.n
    km = {}
    for l in range(1, n + 1):
        for k in range(l - 1, 0, -1):
            if w.j(k) == w.j(l):
                km[l] = k
                break
    for l in range(1, r + 1):
        for k in range(n, 0, -1):
            if w.j(k) == l:
                km[-l] = k
                break
    e = {k for k in range(1, n + 1) if k in km}
    return e, km
