"""Reference implementation of the dense-exponent polynomial kernels.

Terms are dicts mapping a dense exponent tuple (all of the same length)
to a nonzero int. The compiled module ``_ckernel`` exposes the same two
functions and must agree with these bit for bit.
"""
import heapq

from .errors import NotDivisible


def mul_dense(a, b):
    out = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple([x + y for x, y in zip(ea, eb)])
            out[key] = get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _bounds(n, d):
    width = len(next(iter(d)))
    lo_n = list(next(iter(n)))
    hi_n = list(lo_n)
    for e in n:
        for c in range(width):
            x = e[c]
            if x < lo_n[c]:
                lo_n[c] = x
            elif x > hi_n[c]:
                hi_n[c] = x
    lo_d = list(next(iter(d)))
    hi_d = list(lo_d)
    for e in d:
        for c in range(width):
            x = e[c]
            if x < lo_d[c]:
                lo_d[c] = x
            elif x > hi_d[c]:
                hi_d[c] = x
    lo = [lo_n[c] - lo_d[c] for c in range(width)]
    hi = [hi_n[c] - hi_d[c] for c in range(width)]
    return lo, hi


def div_dense(n, d):
    """Exact quotient n / d under lex order on the dense exponent tuples.

    Every quotient exponent is confined to the box [min n - min d,
    max n - max d] coordinatewise, which makes the loop finite.
    """
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not n:
        return {}
    lo, hi = _bounds(n, d)
    if any(l > h for l, h in zip(lo, hi)):
        raise NotDivisible("quotient exponent box is empty")
    lead = max(d)
    lead_c = d[lead]
    dterms = list(d.items())
    rem = dict(n)
    heap = [tuple([-x for x in e]) for e in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        while True:
            top = tuple([-x for x in heapq.heappop(heap)])
            if rem.get(top):
                break
        c = rem[top]
        q, r = divmod(c, lead_c)
        if r:
            raise NotDivisible("leading coefficient does not divide")
        qe = tuple([x - y for x, y in zip(top, lead)])
        for x, l, h in zip(qe, lo, hi):
            if x < l or x > h:
                raise NotDivisible("quotient term leaves the exponent box")
        quot[qe] = q
        for e, dc in dterms:
            key = tuple([x + y for x, y in zip(qe, e)])
            v = rem.get(key, 0) - q * dc
            if v:
                if key not in rem:
                    heapq.heappush(heap, tuple([-x for x in key]))
                rem[key] = v
            else:
                rem.pop(key, None)
    return quot
