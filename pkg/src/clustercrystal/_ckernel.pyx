# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled dense-exponent kernels; mirrors ``_purekernel`` exactly.

Exponent rows live in C arrays. Keys are bytes in an order-preserving
big-endian encoding so that dict hashing and heap comparisons never
touch Python ints on the hot path.
"""
import heapq

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t
from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING

from .errors import NotDivisible

cdef uint64_t BIAS = (<uint64_t>1) << 63


cdef inline void _pack(int64_t* row, Py_ssize_t width, char* out, bint negate) noexcept:
    cdef Py_ssize_t c
    cdef int b
    cdef uint64_t u
    for c in range(width):
        if negate:
            u = <uint64_t>(-row[c]) + BIAS
        else:
            u = <uint64_t>row[c] + BIAS
        for b in range(8):
            out[c * 8 + b] = <char>((u >> (56 - 8 * b)) & 0xFF)


cdef inline void _unpack(const unsigned char* s, Py_ssize_t width, int64_t* row, bint negate) noexcept:
    cdef Py_ssize_t c
    cdef int b
    cdef uint64_t u
    for c in range(width):
        u = 0
        for b in range(8):
            u = (u << 8) | s[c * 8 + b]
        if negate:
            row[c] = -<int64_t>(u - BIAS)
        else:
            row[c] = <int64_t>(u - BIAS)


cdef int64_t* _rows(list keys, Py_ssize_t width) except NULL:
    cdef Py_ssize_t n = len(keys), i, c
    cdef int64_t* buf = <int64_t*>malloc((n * width + 1) * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        e = keys[i]
        for c in range(width):
            buf[i * width + c] = e[c]
    return buf


cdef tuple _as_tuple(int64_t* row, Py_ssize_t width):
    return tuple([row[c] for c in range(width)])


def mul_dense(dict a, dict b):
    if not a or not b:
        return {}
    cdef list ka = list(a), kb = list(b)
    cdef list ca = [a[k] for k in ka], cb = [b[k] for k in kb]
    cdef Py_ssize_t width = len(ka[0]), na = len(ka), nb = len(kb), i, j, c
    cdef int64_t* ra = _rows(ka, width)
    cdef int64_t* rb = NULL
    cdef int64_t* acc = NULL
    cdef dict out = {}
    cdef bytes key
    try:
        rb = _rows(kb, width)
        acc = <int64_t*>malloc((width + 1) * sizeof(int64_t))
        for i in range(na):
            x = ca[i]
            for j in range(nb):
                for c in range(width):
                    acc[c] = ra[i * width + c] + rb[j * width + c]
                key = PyBytes_FromStringAndSize(NULL, width * 8)
                _pack(acc, width, PyBytes_AS_STRING(key), False)
                v = out.get(key)
                if v is None:
                    out[key] = x * cb[j]
                else:
                    out[key] = v + x * cb[j]
        res = {}
        for key, v in out.items():
            if v:
                _unpack(<const unsigned char*>PyBytes_AS_STRING(key), width, acc, False)
                res[_as_tuple(acc, width)] = v
        return res
    finally:
        free(ra)
        if rb != NULL:
            free(rb)
        if acc != NULL:
            free(acc)


def div_dense(dict n, dict d):
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not n:
        return {}
    cdef list kn = list(n), kd = list(d)
    cdef Py_ssize_t width = len(kd[0]), nn = len(kn), nd = len(kd), i, c
    cdef int64_t* rn = _rows(kn, width)
    cdef int64_t* rd = NULL
    cdef int64_t* lo = NULL
    cdef int64_t* hi = NULL
    cdef int64_t* cur = NULL
    cdef int64_t* qe = NULL
    cdef int64_t* lead = NULL
    cdef int64_t* tmp = NULL
    cdef bytes key, hk
    cdef dict rem = {}
    cdef dict quot = {}
    cdef list heap = []
    cdef list dc = [d[k] for k in kd]
    try:
        rd = _rows(kd, width)
        lo = <int64_t*>malloc((width + 1) * sizeof(int64_t))
        hi = <int64_t*>malloc((width + 1) * sizeof(int64_t))
        cur = <int64_t*>malloc((width + 1) * sizeof(int64_t))
        qe = <int64_t*>malloc((width + 1) * sizeof(int64_t))
        lead = <int64_t*>malloc((width + 1) * sizeof(int64_t))
        tmp = <int64_t*>malloc((width + 1) * sizeof(int64_t))
        for c in range(width):
            lo[c] = rn[c]
            hi[c] = rn[c]
            cur[c] = rd[c]
            tmp[c] = rd[c]
        for i in range(nn):
            for c in range(width):
                if rn[i * width + c] < lo[c]:
                    lo[c] = rn[i * width + c]
                if rn[i * width + c] > hi[c]:
                    hi[c] = rn[i * width + c]
        for i in range(nd):
            for c in range(width):
                if rd[i * width + c] < cur[c]:
                    cur[c] = rd[i * width + c]
                if rd[i * width + c] > tmp[c]:
                    tmp[c] = rd[i * width + c]
        for c in range(width):
            lo[c] -= cur[c]
            hi[c] -= tmp[c]
            if lo[c] > hi[c]:
                raise NotDivisible("quotient exponent box is empty")
        lead_t = max(kd)
        lead_c = d[lead_t]
        for c in range(width):
            lead[c] = lead_t[c]
        for i in range(nn):
            key = PyBytes_FromStringAndSize(NULL, width * 8)
            _pack(rn + i * width, width, PyBytes_AS_STRING(key), False)
            rem[key] = n[kn[i]]
            hk = PyBytes_FromStringAndSize(NULL, width * 8)
            _pack(rn + i * width, width, PyBytes_AS_STRING(hk), True)
            heap.append(hk)
        heapq.heapify(heap)
        while rem:
            while True:
                hk = heapq.heappop(heap)
                _unpack(<const unsigned char*>PyBytes_AS_STRING(hk), width, cur, True)
                key = PyBytes_FromStringAndSize(NULL, width * 8)
                _pack(cur, width, PyBytes_AS_STRING(key), False)
                if rem.get(key):
                    break
            q, r = divmod(rem[key], lead_c)
            if r:
                raise NotDivisible("leading coefficient does not divide")
            for c in range(width):
                qe[c] = cur[c] - lead[c]
                if qe[c] < lo[c] or qe[c] > hi[c]:
                    raise NotDivisible("quotient term leaves the exponent box")
            quot[_as_tuple(qe, width)] = q
            for i in range(nd):
                for c in range(width):
                    tmp[c] = qe[c] + rd[i * width + c]
                key = PyBytes_FromStringAndSize(NULL, width * 8)
                _pack(tmp, width, PyBytes_AS_STRING(key), False)
                old = rem.get(key)
                if old is None:
                    v = -q * dc[i]
                    if v:
                        rem[key] = v
                        hk = PyBytes_FromStringAndSize(NULL, width * 8)
                        _pack(tmp, width, PyBytes_AS_STRING(hk), True)
                        heapq.heappush(heap, hk)
                else:
                    v = old - q * dc[i]
                    if v:
                        rem[key] = v
                    else:
                        del rem[key]
        return quot
    finally:
        free(rn)
        if rd != NULL:
            free(rd)
        if lo != NULL:
            free(lo)
        if hi != NULL:
            free(hi)
        if cur != NULL:
            free(cur)
        if qe != NULL:
            free(qe)
        if lead != NULL:
            free(lead)
        if tmp != NULL:
            free(tmp)
