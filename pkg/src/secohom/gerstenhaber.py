"""Cup product, diagonal insertions, circle product, and the bracket, for
cochains with coefficients in A itself.

The cup of f and g evaluates f on the leading diagonal block and g on the
trailing one, multiplies in A, and weighs by eps of every B-entry in the
off-block rectangle.  The insertion f o_i g evaluates g on a contiguous
diagonal block, substitutes the value into slot i of f's argument, and merges
the B-entries across the block.  Both reuse the collapse/expand machinery of
the complex.
"""

from secohom.errors import PreconditionError
from secohom.complex import Cochain
from secohom.vectors import sparse_items, vzero


def _require_coefficients_in_a(*cochains):
    cx = cochains[0].complex
    for f in cochains[1:]:
        if f.complex is not cx:
            raise ValueError("cochains over different complexes")
    flag = cx._cache.get("regular")
    if flag is None:
        flag = cx._cache["regular"] = cx.module.is_regular()
    if not flag:
        raise PreconditionError("coefficients must be A")
    return cx


def _eps_prod_sparse(cx, factors):
    """eps of a product of B-basis elements, as a sparse A-vector."""
    key = ("epsprod", tuple(sorted(factors)))
    out = cx._cache.get(key)
    if out is None:
        T = cx.triple
        acc = {}
        for bi, c in cx._bprod(factors):
            for k, w in T._eps_sparse[bi]:
                acc[k] = acc.get(k, 0) + c * w
        out = cx._cache[key] = tuple((k, v) for k, v in acc.items() if v != 0)
    return out


def cup(f, g):
    """(f cup g) in degree m+n."""
    cx = _require_coefficients_in_a(f, g)
    A = cx.triple.A
    m, n = f.degree, g.degree
    out_b = cx.basis(m + n)
    fb = cx.basis(m)
    gb = cx.basis(n)
    slot = out_b.pair_slot
    f_slots = tuple(slot[p] for p in fb.pairs)
    g_slots = tuple(slot[(i + m, j + m)] for (i, j) in gb.pairs)
    cross = tuple(slot[(i, j)] for i in range(m) for j in range(m, m + n))
    ftab, gtab = f.table, g.table
    table = []
    for off, diag, pairs in out_b:
        fval = ftab[fb.offset(diag[:m], [pairs[s] for s in f_slots])]
        gval = gtab[gb.offset(diag[m:], [pairs[s] for s in g_slots])]
        val = A.mult_vv(fval, gval)
        if cross and any(val):
            esp = _eps_prod_sparse(cx, [pairs[s] for s in cross])
            acc = [0] * A.dim
            for k, c in esp:
                for t, v in enumerate(A.mult_vb(val, k)):
                    if v:
                        acc[t] += c * v
            val = tuple(acc)
        table.append(tuple(val))
    return Cochain(cx, m + n, table, _freeze=False)


def comp_i(f, g, i):
    """The insertion f o_i g (degree m+n-1), 0 <= i <= deg(f)-1."""
    cx = _require_coefficients_in_a(f, g)
    m, n = f.degree, g.degree
    if not 0 <= i <= m - 1:
        raise ValueError(f"insertion index {i} out of range for degree {m}")
    q = m + n - 1
    out_b = cx.basis(q)
    gb = cx.basis(n)
    inner_slots = tuple(out_b.pair_slot[(r + i, c + i)] for (r, c) in gb.pairs)
    gtab = g.table
    table = []
    for off, diag, pairs in out_b:
        gval = gtab[gb.offset(diag[i : i + n], [pairs[s] for s in inner_slots])]
        if not any(gval):
            table.append(vzero(cx.module.dim))
            continue
        de, pe = cx.collapse(q, diag, pairs, i, n, tuple(sparse_items(gval)))
        table.append(cx.evaluate(f, de, pe))
    return Cochain(cx, q, table, _freeze=False)


def circle(f, g):
    """f o g = sum over insertion slots with the pre-Lie signs."""
    cx = _require_coefficients_in_a(f, g)
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        raise ValueError("circle of two 0-cochains has degree -1")
    out = cx.zero(m + n - 1)
    for i in range(m):
        term = comp_i(f, g, i)
        if (n - 1) * i % 2:
            out = out - term
        else:
            out = out + term
    return out


def bracket(f, g):
    """[f, g] = f o g - (-1)^((m-1)(n-1)) g o f."""
    m, n = f.degree, g.degree
    fg = circle(f, g)
    gf = circle(g, f)
    if (m - 1) * (n - 1) % 2:
        return fg + gf
    return fg - gf


def pi_cochain(cx):
    """The degree-2 cochain (a (x) b (x) alpha) -> a b eps(alpha); equals the
    differential of id_A."""
    if cx.flavor != "secondary":
        raise PreconditionError("pi lives in the secondary complex")
    _require_coefficients_in_a(cx.zero(0))
    A = cx.triple.A
    T = cx.triple
    table = []
    for off, diag, pairs in cx.basis(2):
        ab = A.mult[diag[0]][diag[1]]
        table.append(A.mult_vv(ab, T.eps_basis(pairs[0])))
    return Cochain(cx, 2, table, _freeze=False)


def multiplication_cochain(cx):
    """The ordinary 2-cochain a (x) b -> ab (the image of pi under the
    comparison map)."""
    _require_coefficients_in_a(cx.zero(0))
    A = cx.triple.A
    ocx = cx.ordinary
    table = []
    for off, diag, _ in ocx.basis(2):
        table.append(A.mult[diag[0]][diag[1]])
    return Cochain(ocx, 2, table, _freeze=False)
