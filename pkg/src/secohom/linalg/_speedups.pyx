# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels: the hot twin of _pure.py.

Same algorithms, same canonical output.  The rational kernel keeps Python
ints (entries routinely outgrow 64 bits) but runs the loops with C indexing;
the prime-field kernel works on C int64 buffers outright (p < 2^31, so
products fit in 63 bits).
"""

from math import gcd

from cpython cimport array
import array as _array

KERNEL_NAME = "speedups"

cdef array.array _LL = _array.array('q', [])


cdef long long _modpow(long long b, long long e, long long p):
    cdef long long r = 1
    b %= p
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef list _normalize_int_row(list row, Py_ssize_t lead, Py_ssize_t ncols):
    cdef Py_ssize_t j
    g = 0
    for j in range(lead, ncols):
        x = row[j]
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        for j in range(lead, ncols):
            row[j] = row[j] // g
    if row[lead] < 0:
        for j in range(lead, ncols):
            row[j] = -row[j]
    return row


def rref_int(rows, Py_ssize_t ncols):
    """Canonical fraction-free RREF of integer rows; see _pure.rref_int."""
    cdef dict piv_of_col = {}
    cdef list r, piv, out, q
    cdef Py_ssize_t j, lead, i, k, pc
    for row in rows:
        r = list(row)
        while True:
            lead = -1
            for j in range(ncols):
                if r[j]:
                    lead = j
                    break
            if lead < 0:
                break
            obj = piv_of_col.get(lead)
            if obj is None:
                piv_of_col[lead] = _normalize_int_row(r, lead, ncols)
                break
            piv = <list> obj
            a = piv[lead]
            b = r[lead]
            g = gcd(a, b)
            ag = a // g
            bg = b // g
            for j in range(lead, ncols):
                r[j] = ag * r[j] - bg * piv[j]
            g = 0
            for j in range(lead, ncols):
                x = r[j]
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g > 1:
                for j in range(lead, ncols):
                    r[j] = r[j] // g

    pivots = sorted(piv_of_col)
    out = [piv_of_col[c] for c in pivots]
    cdef Py_ssize_t npiv = len(pivots)
    for k in range(npiv - 1, 0, -1):
        pc = pivots[k]
        piv = <list> out[k]
        a = piv[pc]
        for i in range(k):
            q = <list> out[i]
            b = q[pc]
            if b:
                g = gcd(a, b)
                ag = a // g
                bg = b // g
                q = [ag * q[j] - bg * piv[j] for j in range(ncols)]
                out[i] = _normalize_int_row(q, pivots[i], ncols)
    return out, pivots


def rref_mod(rows, Py_ssize_t ncols, long long p):
    """Canonical RREF over GF(p); see _pure.rref_mod."""
    cdef dict piv_of_col = {}
    cdef array.array ra
    cdef long long[:] rv, pv
    cdef Py_ssize_t j, lead, i, k, pc
    cdef long long c, inv, x
    for row in rows:
        ra = array.clone(_LL, ncols, zero=False)
        rv = ra
        j = 0
        for e in row:
            rv[j] = (<long long> e) % p
            j += 1
        while True:
            lead = -1
            for j in range(ncols):
                if rv[j]:
                    lead = j
                    break
            if lead < 0:
                break
            obj = piv_of_col.get(lead)
            if obj is None:
                inv = _modpow(rv[lead], p - 2, p)
                for j in range(lead, ncols):
                    rv[j] = (rv[j] * inv) % p
                piv_of_col[lead] = ra
                break
            pv = <array.array> obj
            c = rv[lead]
            for j in range(lead, ncols):
                x = (rv[j] - (c * pv[j]) % p) % p
                if x < 0:
                    x += p
                rv[j] = x

    pivots = sorted(piv_of_col)
    out_arrays = [piv_of_col[col] for col in pivots]
    cdef Py_ssize_t npiv = len(pivots)
    for k in range(npiv - 1, 0, -1):
        pc = pivots[k]
        pv = out_arrays[k]
        for i in range(k):
            rv = out_arrays[i]
            c = rv[pc]
            if c:
                for j in range(pc, ncols):
                    x = (rv[j] - (c * pv[j]) % p) % p
                    if x < 0:
                        x += p
                    rv[j] = x
    out = [list(a) for a in out_arrays]
    return out, pivots
