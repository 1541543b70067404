"""Exchange matrices, seeds, mutation and mutation diagrams."""
from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .errors import BudgetExceeded, InvariantViolation, OutOfRange
from .laurent import LaurentPolynomial, poly_divide_exact, product
from .roots import CartanData, ReducedWord, e_and_kminus

log = logging.getLogger(__name__)

NODE_CAP = 10 ** 6


def vertex_order(w, r):
    """Row indices: -1..-r then 1..n."""
    return tuple(range(-1, -r - 1, -1)) + tuple(range(1, w.n + 1))


def _pos(k, n):
    # positions along the extended word: 1 < ... < n < -1 < ... < -r
    return k if k > 0 else n - k


def _letter(w, k):
    return abs(w.j(k))


def gamma_graph(cd, w):
    """Arrows (src, dst) of the graph attached to the reduced word w.

    Horizontal arrows go x_k -> x_{k^-}. Inclined arrows join a, b (at least
    one mutable) with a^- < b^- < a < b along the extended word, pointing
    a -> b, whenever the Cartan entry of their letters is negative. An
    undefined a^- counts as -infinity.
    """
    if not isinstance(w, ReducedWord):
        w = ReducedWord(w)
    r = cd.rank
    n = w.n
    e, km = e_and_kminus(w, r)
    verts = vertex_order(w, r)
    arrows = set()
    for k in verts:
        if k in km:
            arrows.add((k, km[k]))
    for a in verts:
        for b in verts:
            if a == b or (a not in e and b not in e):
                continue
            pa, pb = _pos(a, n), _pos(b, n)
            if not pa < pb or b not in km:
                continue
            am = km.get(a, -(10 ** 9))
            if am < km[b] < pa and cd.a(_letter(w, a), _letter(w, b)) < 0:
                arrows.add((a, b))
    return arrows


class ExchangeMatrix:
    """Rows indexed by all vertices, columns by the mutable set; sparse storage."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries, check=True):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.entries = {k: v for k, v in entries.items() if v}
        if check and not self.is_skew_symmetrizable():
            raise InvariantViolation("principal part is not skew-symmetrizable")

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def __eq__(self, other):
        return (isinstance(other, ExchangeMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def principal(self):
        return [[self[i, j] for j in self.cols] for i in self.cols]

    def to_rows(self):
        return [[self[i, j] for j in self.cols] for i in self.rows]

    def symmetrizer(self):
        """Positive d with d_i b_ij = -d_j b_ji on the principal part, or None."""
        cols = self.cols
        d = {}
        for start in cols:
            if start in d:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in cols:
                    bij, bji = self[i, j], self[j, i]
                    if (bij == 0) != (bji == 0):
                        return None
                    if bij == 0:
                        continue
                    if (bij > 0) == (bji > 0):
                        return None
                    val = -d[i] * bij / bji
                    if j not in d:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        return None
        return d

    def is_skew_symmetrizable(self):
        return self.symmetrizer() is not None

    def mutate(self, k):
        if k not in self.cols:
            raise OutOfRange(f"{k} is not a mutable index")
        out = {}
        for i in self.rows:
            bik = self[i, k]
            for j in self.cols:
                bij = self[i, j]
                if i == k or j == k:
                    v = -bij
                else:
                    bkj = self[k, j]
                    v = bij + (abs(bik) * bkj + bik * abs(bkj)) // 2
                if v:
                    out[i, j] = v
        return ExchangeMatrix(self.rows, self.cols, out)


def initial_exchange_matrix(cd, w):
    if not isinstance(w, ReducedWord):
        w = ReducedWord(w)
    r = cd.rank
    e, _ = e_and_kminus(w, r)
    cols = tuple(sorted(e))
    ent = {}
    for src, dst in gamma_graph(cd, w):
        ls, ld = _letter(w, src), _letter(w, dst)
        # arrow src -> dst contributes to column dst (row src) and column src (row dst)
        if dst in e:
            ent[src, dst] = 1 if ls == ld else -cd.a(ls, ld)
        if src in e:
            ent[dst, src] = -1 if ls == ld else cd.a(ld, ls)
    return ExchangeMatrix(vertex_order(w, r), cols, ent)


class Seed:
    """Variables on the (a;Y) chart together with an exchange matrix."""

    def __init__(self, cd, vars, matrix, mutable, word=None):
        self.cd = cd
        self.vars = dict(vars)
        self.matrix = matrix
        self.mutable = frozenset(mutable)
        self.word = word
        if set(matrix.cols) != set(self.mutable):
            raise InvariantViolation("matrix columns differ from the mutable set")

    @property
    def frozen(self):
        return tuple(k for k in self.matrix.rows if k not in self.mutable)

    def mutable_vars(self):
        return {k: self.vars[k] for k in self.matrix.cols}

    def mutate(self, k):
        if k not in self.mutable:
            raise OutOfRange(f"cannot mutate at frozen index {k}")
        r = self.cd.rank
        B = self.matrix
        pos, neg = [], []
        for i in B.rows:
            b = B[i, k]
            if b > 0:
                pos.append(self.vars[i] ** b)
            elif b < 0:
                neg.append(self.vars[i] ** (-b))
        num = product(pos, r) + product(neg, r)
        new = poly_divide_exact(num, self.vars[k])
        if not new.is_homogeneous():
            raise InvariantViolation(f"mutation at {k} produced an inhomogeneous variable")
        vars_ = dict(self.vars)
        vars_[k] = new
        return Seed(self.cd, vars_, B.mutate(k), self.mutable, self.word)

    def mutate_sequence(self, seq):
        """Apply mutations; seq is written as in mu_{k1} mu_{k2} ..., rightmost first."""
        s = self
        for k in reversed(tuple(seq)):
            s = s.mutate(k)
        return s

    def canonical_key(self):
        cols = sorted(self.matrix.cols, key=lambda c: self.vars[c].sort_key())
        fr = self.frozen
        B = self.matrix
        mat = tuple(tuple(B[i, j] for j in cols) for i in tuple(fr) + tuple(cols))
        return tuple(self.vars[c] for c in cols), mat

    def __eq__(self, other):
        return isinstance(other, Seed) and self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def same_labelled(self, other):
        return self.vars == other.vars and self.matrix == other.matrix

    def to_json(self):
        return {
            "type": str(self.cd),
            "word": list(self.word.letters) if self.word is not None else None,
            "mutable": sorted(self.mutable),
            "frozen": list(self.frozen),
            "vars": {str(k): v.render() for k, v in sorted(self.vars.items())},
            "matrix": {"rows": list(self.matrix.rows), "cols": list(self.matrix.cols),
                       "entries": self.matrix.to_rows()},
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def mutate_matrix(B, k):
    return B.mutate(k)


def mutate_seed(s, k):
    return s.mutate(k)


def seed_from_json(data):
    from .laurent import parse_polynomial
    cd = CartanData.parse(data["type"])
    vars_ = {int(k): parse_polynomial(v, cd.rank) for k, v in data["vars"].items()}
    m = data["matrix"]
    ent = {}
    for i, row in zip(m["rows"], m["entries"]):
        for j, v in zip(m["cols"], row):
            if v:
                ent[i, j] = v
    mat = ExchangeMatrix(m["rows"], m["cols"], ent)
    word = ReducedWord(data["word"]) if data.get("word") else None
    return Seed(cd, vars_, mat, data["mutable"], word)


def theorem_label(cd, k):
    """Engine index for the theorem's mu_k (k in [1, r])."""
    if not 1 <= k <= cd.rank:
        raise OutOfRange(f"theorem label {k} outside [1, {cd.rank}]")
    return cd.rank + k


# ------------------------------------------------------------------ enumeration

def _expand(seed):
    return [seed.mutate(k) for k in seed.matrix.cols]


def enumerate_seeds(initial, cap=NODE_CAP, threads=1):
    """All seeds reachable from initial, up to simultaneous permutation."""
    seen = {initial.canonical_key(): initial}
    frontier = [initial]
    pool = ThreadPoolExecutor(threads) if threads and threads > 1 else None
    try:
        while frontier:
            if pool is not None:
                batches = list(pool.map(_expand, frontier))
            else:
                batches = [_expand(s) for s in frontier]
            nxt = []
            for batch in batches:
                for s in batch:
                    key = s.canonical_key()
                    if key not in seen:
                        seen[key] = s
                        nxt.append(s)
                        if len(seen) > cap:
                            raise BudgetExceeded(f"more than {cap} seeds; input is not of finite type?")
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    return list(seen.values())


def enumerate_cluster_variables(initial, cap=NODE_CAP, threads=1):
    out = set()
    for s in enumerate_seeds(initial, cap, threads):
        out.update(s.mutable_vars().values())
    return out


def default_threads():
    return os.cpu_count() or 1


# ------------------------------------------------------------------ diagrams

def mutation_diagram(seed_or_matrix):
    """{(src, dst): label} with labels in {1, 2, -2}."""
    B = seed_or_matrix.matrix if isinstance(seed_or_matrix, Seed) else seed_or_matrix
    mut = set(B.cols)
    arrows = {}
    for i in mut:
        for j in mut:
            if i >= j:
                continue
            bij, bji = B[i, j], B[j, i]
            if bij == 0 and bji == 0:
                continue
            if abs(bij) > 2 or abs(bji) > 2 or abs(bij * bji) > 3 or bij * bji >= 0:
                raise OutOfRange(f"entries b[{i},{j}]={bij}, b[{j},{i}]={bji} outside the diagram range")
            src, dst = (i, j) if bij > 0 else (j, i)
            f, b = abs(B[src, dst]), abs(B[dst, src])
            arrows[src, dst] = 1 if f == b == 1 else (2 if f == 2 else -2)
    for i in B.rows:
        if i in mut:
            continue
        for j in B.cols:
            b = B[i, j]
            if b == 0:
                continue
            if abs(b) > 2:
                raise OutOfRange(f"entry b[{i},{j}]={b} outside the diagram range")
            if b > 0:
                arrows[i, j] = b
            else:
                arrows[j, i] = 1 if b == -1 else -2
    return arrows


def diagram_dot(diagram, names=None, name="diagram"):
    names = names or {}
    verts = sorted({v for e in diagram for v in e}, key=lambda v: (v > 0, abs(v)))
    lines = [f"digraph {name} {{"]
    for v in verts:
        lines.append(f'  "{v}" [label="{names.get(v, f"x{v}")}"];')
    for (a, b), lab in sorted(diagram.items()):
        attr = f' [label="{lab}"]' if lab != 1 else ""
        lines.append(f'  "{a}" -> "{b}"{attr};')
    lines.append("}")
    return "\n".join(lines)


def _edge(D, i, j):
    """(direction, label) for the edge between i and j: +1 means i -> j."""
    if (i, j) in D:
        return 1, D[i, j]
    if (j, i) in D:
        return -1, D[j, i]
    return None


def _normalize(src, dst, lab, mut):
    if lab == -2 and src not in mut and dst in mut:
        return 1
    if lab == 2 and src in mut and dst not in mut:
        return 1
    return lab


def _rewrite_pair(a, b, e):
    """Predicted edge after mutation for a path i -a-> k -b-> j with edge e.

    e is None or (direction, label) relative to i -> j. Returns
    (matched, prediction) where prediction is None or (dir, label).
    """
    if a == 1 and b == 1 and e is None:
        return True, (1, 1)
    if a == 1 and b == 1 and e == (-1, 1):
        return True, None
    if abs(a) == 2 and b == -a and e == (-1, 1):
        return True, (1, 1)
    if abs(a) == 2 and b == 1 and e is None:
        return True, (1, a)
    if a == 1 and abs(b) == 2 and e == (-1, -b):
        return True, None
    return False, None


def predict_diagram(D, k, mutable):
    """Predicted diagram after mutating at k, and the list of skipped triples."""
    mut = set(mutable)
    out = {}
    skipped = []
    verts = sorted({v for e in D for v in e})
    ins = [i for i in verts if (i, k) in D]
    outs = [j for j in verts if (k, j) in D]
    for (a, b), lab in D.items():
        if k in (a, b):
            src, dst = b, a
            nl = -lab if abs(lab) == 2 else lab
            out[src, dst] = _normalize(src, dst, nl, mut)
    handled = set()
    for i in ins:
        for j in outs:
            if i == j or (i not in mut and j not in mut):
                continue
            handled.add(frozenset((i, j)))
            ok, pred = _rewrite_pair(D[i, k], D[k, j], _edge(D, i, j))
            if not ok:
                skipped.append((i, k, j))
                continue
            if pred is not None:
                d, lab = pred
                src, dst = (i, j) if d == 1 else (j, i)
                out[src, dst] = _normalize(src, dst, lab, mut)
    for (a, b), lab in D.items():
        if k in (a, b) or frozenset((a, b)) in handled:
            continue
        out[a, b] = lab
    return out, skipped, handled


def check_rewrite(B, k):
    """Compare the rewrite rules with the diagram of mu_k(B).

    Returns {"ok", "skipped", "mismatches"}; skipped triples match no rule
    and their pairs are excluded from the comparison.
    """
    return compare_rewrite(mutation_diagram(B), k, mutation_diagram(B.mutate(k)), B.cols)


def compare_rewrite(before, k, after, mutable):
    pred, skipped, _ = predict_diagram(before, k, mutable)
    skip_pairs = {frozenset((i, j)) for i, _, j in skipped}
    mism = []
    for a, b in sorted(set(pred) | set(after)):
        if frozenset((a, b)) in skip_pairs:
            continue
        if pred.get((a, b)) != after.get((a, b)):
            mism.append(((a, b), pred.get((a, b)), after.get((a, b))))
    return {"ok": not mism, "skipped": skipped, "mismatches": mism}
