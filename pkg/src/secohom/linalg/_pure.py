"""Pure-Python elimination kernels.

Both kernels stream rows into an echelon structure and finish with a
back-cleaning pass, so memory stays O(ncols^2) no matter how many rows are
fed in (differential matrices are much taller than they are wide).

Rational elimination is fraction-free: rows are integer vectors, updates are
cross-multiplications, and every row is divided by its content (gcd) after
each update to keep coefficient growth in check.  The canonical output is
unique for a given row space: pivots strictly increasing, pivot entries
positive, rows primitive, and all entries above and below pivots zero.

The prime-field kernel is plain Gauss-Jordan with monic pivots.

_speedups.pyx is the compiled twin of this module; the two must produce
bit-identical results (see tests/test_kernels.py).
"""

from math import gcd

KERNEL_NAME = "pure"


def _row_content(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


def _normalize_int_row(row, lead):
    g = _row_content(row)
    if g > 1:
        row = [x // g for x in row]
    if row[lead] < 0:
        row = [-x for x in row]
    return row


def rref_int(rows, ncols):
    """Canonical fraction-free RREF of integer rows.

    rows: iterable of length-ncols lists of ints (not mutated).
    Returns (echelon_rows, pivots) with echelon_rows a list of primitive
    integer rows sorted by pivot column.
    """
    piv_of_col = {}
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
            piv = piv_of_col.get(lead)
            if piv is None:
                piv_of_col[lead] = _normalize_int_row(r, lead)
                break
            a = piv[lead]
            b = r[lead]
            g = gcd(a, b)
            ag = a // g
            bg = b // g
            for j in range(lead, ncols):
                r[j] = ag * r[j] - bg * piv[j]
            g = _row_content(r)
            if g > 1:
                for j in range(lead, ncols):
                    r[j] //= g

    pivots = sorted(piv_of_col)
    out = [piv_of_col[c] for c in pivots]
    # Clear entries above pivots (below are zero by construction).
    for k in range(len(pivots) - 1, 0, -1):
        pc = pivots[k]
        piv = out[k]
        a = piv[pc]
        for i in range(k):
            b = out[i][pc]
            if b:
                g = gcd(a, b)
                ag = a // g
                bg = b // g
                q = out[i]
                out[i] = [ag * q[j] - bg * piv[j] for j in range(ncols)]
                out[i] = _normalize_int_row(out[i], pivots[i])
    return out, pivots


def rref_mod(rows, ncols, p):
    """Canonical RREF over GF(p): monic pivots, entries in [0, p)."""
    piv_of_col = {}
    for row in rows:
        r = [x % p for x in row]
        while True:
            lead = -1
            for j in range(ncols):
                if r[j]:
                    lead = j
                    break
            if lead < 0:
                break
            piv = piv_of_col.get(lead)
            if piv is None:
                inv = pow(r[lead], p - 2, p)
                piv_of_col[lead] = [(x * inv) % p for x in r]
                break
            c = r[lead]
            for j in range(lead, ncols):
                r[j] = (r[j] - c * piv[j]) % p

    pivots = sorted(piv_of_col)
    out = [piv_of_col[c] for c in pivots]
    for k in range(len(pivots) - 1, 0, -1):
        pc = pivots[k]
        piv = out[k]
        for i in range(k):
            c = out[i][pc]
            if c:
                q = out[i]
                out[i] = [(q[j] - c * piv[j]) % p for j in range(ncols)]
    return out, pivots
