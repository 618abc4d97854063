"""Square-zero extensions of B-algebras and their dictionary with degree-2
cohomology, plus the first deformation obstruction.

An extension is materialized as a genuine FiniteAlgebra on A (+) M whose
alpha = 1 product table carries the cocycle; the rest of the product family
is ``eps_X(alpha) . x . y`` and therefore needs no tables of its own.  The
algebra validator runs on construction, so associativity of the twisted
product (equivalent to the cocycle condition) is re-proved on every build.
"""

from secohom.algebra import FiniteAlgebra, LinearMap
from secohom.complex import Cochain
from secohom.errors import PreconditionError, ValidationError
from secohom.gerstenhaber import circle
from secohom.vectors import is_zero, sparse_items, vadd, vneg, vscale, vsub, vzero


def _unit_sparse(alg):
    return tuple(sparse_items(alg.unit))


def _eval_units(cx, c, diag_entries, pair_entries):
    return cx.evaluate(c, diag_entries, pair_entries)


class Extension:
    """0 -> M -> X -> A -> 0 with M^2 = 0, built from a 2-cocycle."""

    __slots__ = ("triple", "module", "cocycle", "X", "eps_X_cols", "projection", "section")

    def __init__(self, triple, module, cocycle, X, eps_X_cols, projection, section):
        self.triple = triple
        self.module = module
        self.cocycle = cocycle
        self.X = X
        self.eps_X_cols = eps_X_cols
        self.projection = projection
        self.section = section

    @property
    def dim(self):
        return self.X.dim

    def embed_module(self, m_vec):
        return vzero(self.triple.A.dim) + tuple(m_vec)

    def module_part(self, x_vec):
        return tuple(x_vec[self.triple.A.dim :])

    def eps_X(self, b_vec):
        acc = [0] * self.X.dim
        for j, c in enumerate(b_vec):
            if c:
                for k, w in enumerate(self.eps_X_cols[j]):
                    if w:
                        acc[k] += c * w
        return tuple(acc)

    def m_alpha(self, b_vec, x, y):
        """The product family: m_alpha(x (x) y) = eps_X(alpha) x y."""
        return self.X.mult_vv(self.eps_X(b_vec), self.X.mult_vv(x, y))

    def m_alpha_direct(self, b_vec, x, y):
        """The same product from the displayed formula
        eps(a)ab + eps(a)an + mb eps(a) + c(a (x) b (x) alpha); agreeing with
        m_alpha is equivalent to the key cocycle identity."""
        T = self.triple
        A = T.A
        mod = self.module
        dA = A.dim
        a, m = tuple(x[:dA]), tuple(x[dA:])
        b, n = tuple(y[:dA]), tuple(y[dA:])
        e = T.eps(b_vec)
        a_part = A.mult_vv(e, A.mult_vv(a, b))
        m_part = vadd(
            mod.act_left(A.mult_vv(e, a), n),
            mod.act_right(m, A.mult_vv(b, e)),
        )
        cx = self.cocycle.complex
        cval = cx.evaluate(
            self.cocycle,
            [tuple(sparse_items(a)), tuple(sparse_items(b))],
            [tuple(sparse_items(b_vec))],
        )
        return tuple(a_part) + tuple(vadd(m_part, cval))

    def validate(self):
        """Full invariant check; raising here would mean an engine bug."""
        T = self.triple
        A, B = T.A, T.B
        X = self.X
        dA, m = A.dim, self.module.dim
        p = self.projection
        s = self.section
        # projection is an algebra morphism with the right kernel
        for i in range(X.dim):
            for j in range(X.dim):
                if p.apply(X.mult[i][j]) != A.mult_vv(p.apply(X.basis(i)), p.apply(X.basis(j))):
                    raise ValidationError("projection not multiplicative", (i, j))
        if p.apply(X.unit) != A.unit:
            raise ValidationError("projection not unital")
        for i in range(dA):
            if p.apply(s.cols[i]) != A.basis(i):
                raise ValidationError("section is not a section", (i,))
        # (ker p)^2 = 0
        for i in range(m):
            for j in range(m):
                if not is_zero(X.mult[dA + i][dA + j]):
                    raise ValidationError("kernel not square-zero", (i, j))
        # eps_X is an algebra map lifting eps, with central image
        for i in range(B.dim):
            for j in range(B.dim):
                lhs = self.eps_X(B.mult[i][j])
                rhs = X.mult_vv(self.eps_X_cols[i], self.eps_X_cols[j])
                if lhs != rhs:
                    raise ValidationError("eps_X not multiplicative", (i, j))
        if self.eps_X(B.unit) != X.unit:
            raise ValidationError("eps_X not unital")
        for j in range(B.dim):
            img = self.eps_X_cols[j]
            for i in range(X.dim):
                if X.mult_vb(img, i) != X.mult_bv(i, img):
                    raise ValidationError("eps_X image not central", (j, i))
            if p.apply(img) != T.eps_basis(j):
                raise ValidationError("projection does not intertwine eps", (j,))
        # the induced bimodule on ker p is the given one
        for i in range(dA):
            for t in range(m):
                prod = X.mult_vv(s.cols[i], X.basis(dA + t))
                if self.module_part(prod) != self.module.act_left_basis(i, _basis(m, t)):
                    raise ValidationError("induced left action mismatch", (i, t))
                prod = X.mult_vv(X.basis(dA + t), s.cols[i])
                if self.module_part(prod) != self.module.act_right_basis(_basis(m, t), i):
                    raise ValidationError("induced right action mismatch", (i, t))
        return self

    def __repr__(self):
        return f"Extension(X dim {self.X.dim} over {self.triple.field})"


def _basis(n, i):
    v = [0] * n
    v[i] = 1
    return tuple(v)


def extension_from_cocycle(c):
    """Build the extension A (+) M attached to a 2-cocycle, fully validated."""
    cx = c.complex
    if c.degree != 2 or cx.flavor != "secondary":
        raise PreconditionError("extensions are classified by secondary 2-cochains")
    if not cx.is_cocycle(c):
        raise ValidationError("not a cocycle")
    T = cx.triple
    A = T.A
    mod = cx.module
    dA, m = A.dim, mod.dim
    D = dA + m
    field = T.field
    unit_b = _unit_sparse(T.B)
    unit_a = _unit_sparse(A)

    def cval(asp, bsp, alsp):
        return cx.evaluate(c, [asp, bsp], [alsp])

    mult = [[None] * D for _ in range(D)]
    for i in range(dA):
        for j in range(dA):
            a_part = A.mult[i][j]
            m_part = cval(((i, field.one),), ((j, field.one),), unit_b)
            mult[i][j] = tuple(a_part) + tuple(m_part)
    for i in range(dA):
        for t in range(m):
            mult[i][dA + t] = vzero(dA) + mod.act_left_basis(i, _basis(m, t))
            mult[dA + t][i] = vzero(dA) + mod.act_right_basis(_basis(m, t), i)
    for s_ in range(m):
        for t in range(m):
            mult[dA + s_][dA + t] = vzero(D)

    c111 = cval(unit_a, unit_a, unit_b)
    unit = tuple(A.unit) + vneg(c111)
    labels = list(A.labels) + [f"m{t}" for t in range(m)]
    X = FiniteAlgebra(field, mult, unit, labels=labels)

    eps_cols = []
    for k in range(T.B.dim):
        e = T.eps_basis(k)
        m_part = vadd(
            vscale(-2, mod.act_left(e, c111)),
            cval(unit_a, unit_a, ((k, field.one),)),
        )
        eps_cols.append(tuple(e) + tuple(m_part))

    projection = LinearMap(
        D, dA, [A.basis(i) for i in range(dA)] + [vzero(dA)] * m
    )
    section = LinearMap(dA, D, [_basis(D, i) for i in range(dA)])
    ext = Extension(T, mod, c, X, tuple(eps_cols), projection, section)
    return ext.validate()


def cochain_to_map(f):
    """Degree-1 cochain <-> LinearMap A -> M."""
    cx = f.complex
    return LinearMap(cx.triple.A.dim, cx.module.dim, list(f.table))


def map_to_cochain(cx, w):
    return Cochain(cx, 1, list(w.cols), _freeze=False)


def section_plus(ext, f):
    """The section a -> s(a) + f(a) for a linear twist f: A -> M."""
    dA = ext.triple.A.dim
    cols = [
        vadd(ext.section.cols[i], ext.embed_module(f.apply(ext.triple.A.basis(i))))
        for i in range(dA)
    ]
    return LinearMap(dA, ext.X.dim, cols)


def cocycle_from_section(ext, section=None):
    """c_s(a (x) b (x) alpha) = eps_X(alpha) s(a) s(b) - s(eps(alpha) a b)."""
    cx = ext.cocycle.complex
    T = ext.triple
    A = T.A
    X = ext.X
    s = section if section is not None else ext.section
    for i in range(A.dim):
        if ext.projection.apply(s.cols[i]) != A.basis(i):
            raise ValidationError("not a section of the projection", (i,))
    table = []
    for off, diag, pairs in cx.basis(2):
        ex = ext.eps_X_cols[pairs[0]]
        lhs = X.mult_vv(ex, X.mult_vv(s.cols[diag[0]], s.cols[diag[1]]))
        arg = A.mult_vv(T.eps_basis(pairs[0]), A.mult[diag[0]][diag[1]])
        rhs = s.apply(arg)
        diff = vsub(lhs, rhs)
        if not is_zero(diff[: A.dim]):
            raise ValidationError("section cocycle left the kernel", (off,))
        table.append(diff[A.dim :])
    out = Cochain(cx, 2, table, _freeze=False)
    assert cx.is_cocycle(out)
    return out


def classes_equivalent(c1, c2):
    """Whether two cocycles classify equivalent extensions.

    Returns (flag, witness): when True the witness f satisfies
    c1 - c2 = delta(f) and F(a + m) = a + m + f(a) has been verified to be a
    B-algebra isomorphism between the two built extensions commuting with the
    projections.
    """
    cx = c1.complex
    if c2.complex is not cx or c1.degree != 2 or c2.degree != 2:
        raise ValueError("expected two degree-2 cochains over one complex")
    for c in (c1, c2):
        if not cx.is_cocycle(c):
            raise ValidationError("not a cocycle")
    pre = cx.coboundary_preimage(c1 - c2)
    if pre is None:
        return False, None
    f = cochain_to_map(pre)
    e1 = extension_from_cocycle(c1)
    e2 = extension_from_cocycle(c2)
    dA = cx.triple.A.dim
    m = cx.module.dim
    D = dA + m
    cols = [
        vadd(_basis(D, i), e1.embed_module(f.apply(cx.triple.A.basis(i))))
        for i in range(dA)
    ] + [_basis(D, dA + t) for t in range(m)]
    F = LinearMap(D, D, cols)
    for i in range(D):
        for j in range(D):
            lhs = F.apply(e1.X.mult[i][j])
            rhs = e2.X.mult_vv(F.cols[i], F.cols[j])
            if lhs != rhs:
                raise ValidationError("equivalence witness not multiplicative", (i, j))
    if F.apply(e1.X.unit) != e2.X.unit:
        raise ValidationError("equivalence witness not unital")
    for k in range(cx.triple.B.dim):
        if F.apply(e1.eps_X_cols[k]) != e2.eps_X_cols[k]:
            raise ValidationError("equivalence witness not B-linear", (k,))
    for i in range(D):
        if e2.projection.apply(F.cols[i]) != e1.projection.apply(_basis(D, i)):
            raise ValidationError("equivalence witness does not commute with projections", (i,))
    return True, f


def key_identity_holds(c):
    """The §-free statement of the fact that a 2-cocycle is determined by its
    alpha = 1 and a = b = 1 restrictions:
    c(a,b,alpha) = c(eps(alpha), ab, 1) + c(1,1,alpha).ab
                   - 2 eps(alpha).c(1,1,1).ab + eps(alpha).c(a,b,1)."""
    cx = c.complex
    T = cx.triple
    A = T.A
    mod = cx.module
    unit_b = _unit_sparse(T.B)
    unit_a = _unit_sparse(A)
    one = T.field.one
    c111 = cx.evaluate(c, [unit_a, unit_a], [unit_b])
    for off, diag, pairs in cx.basis(2):
        lhs = c.table[off]
        e = T.eps_basis(pairs[0])
        ab = A.mult[diag[0]][diag[1]]
        term1 = cx.evaluate(
            c, [tuple(sparse_items(e)), tuple(sparse_items(ab))], [unit_b]
        )
        term2 = mod.act_right(
            cx.evaluate(c, [unit_a, unit_a], [((pairs[0], one),)]), ab
        )
        term3 = vscale(-2, mod.act_right(mod.act_left(e, c111), ab))
        term4 = mod.act_left(
            e,
            cx.evaluate(c, [((diag[0], one),), ((diag[1], one),)], [unit_b]),
        )
        if lhs != vadd(vadd(term1, term2), vadd(term3, term4)):
            return False
    return True


class ObstructionResult:
    """The class of c o c in degree 3: the first obstruction to extending a
    square-zero deformation one more order."""

    __slots__ = ("cochain", "vanishes", "preimage")

    def __init__(self, cochain, vanishes, preimage):
        self.cochain = cochain
        self.vanishes = vanishes
        self.preimage = preimage

    def __repr__(self):
        return f"ObstructionResult(vanishes={self.vanishes})"


def first_obstruction(c):
    """The class of c o c for a 2-cocycle c with coefficients in A."""
    cx = c.complex
    if not cx.is_cocycle(c):
        raise ValidationError("not a cocycle")
    o = circle(c, c)
    if not cx.is_cocycle(o):
        raise ValidationError("obstruction is not closed (engine bug)")
    pre = cx.coboundary_preimage(o)
    return ObstructionResult(o, pre is not None, pre)


def obstruction_sum(cochains):
    """sum_i c_i o c_{n+1-i} for a list [c_1, ..., c_n] of 2-cochains: the
    degree-3 obstruction cochain of an order-n deformation."""
    n = len(cochains)
    if n == 0:
        raise ValueError("empty cochain list")
    cx = cochains[0].complex
    out = cx.zero(3)
    for i in range(n):
        out = out + circle(cochains[i], cochains[n - 1 - i])
    return out
