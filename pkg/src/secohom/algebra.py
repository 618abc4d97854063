"""Finite-dimensional algebras, triples (A, B, eps), bimodules, and the
derivation-space computations.

Structure constants are the single source of truth: every product anywhere in
the engine expands through ``mult`` tables, never through symbolic
arithmetic.  All constructors validate on the way in and raise
ValidationError naming the violated axiom and the offending basis indices.
"""

from secohom.errors import ValidationError
from secohom.fields import QQ
from secohom.linalg import Matrix, Subspace, nullspace, row_space
from secohom.vectors import (
    basis_vector,
    is_zero,
    sparse_items,
    vadd,
    vaddto,
    vsub,
    vzero,
)


class FiniteAlgebra:
    """Unital associative algebra given by structure constants.

    mult[i][j] is the coordinate vector of e_i * e_j; unit is the coordinate
    vector of 1.  Immutable after construction.
    """

    __slots__ = ("field", "dim", "labels", "mult", "unit", "_prod", "_commutative")

    def __init__(self, field, mult, unit, labels=None, validate=True):
        self.field = field
        d = len(mult)
        self.dim = d
        coerce = field
        self.mult = tuple(
            tuple(tuple(coerce(c) for c in mult[i][j]) for j in range(d))
            for i in range(d)
        )
        self.unit = tuple(coerce(c) for c in unit)
        if labels is None:
            labels = [f"e{i}" for i in range(d)]
        self.labels = tuple(labels)
        # sparse structure constants; the fan-out of every product expansion
        self._prod = tuple(
            tuple(tuple(sparse_items(self.mult[i][j])) for j in range(d))
            for i in range(d)
        )
        self._commutative = all(
            self.mult[i][j] == self.mult[j][i] for i in range(d) for j in range(i)
        )
        if validate:
            self._validate()

    def _validate(self):
        d = self.dim
        for row in self.mult:
            if len(row) != d:
                raise ValidationError("malformed multiplication table")
            for v in row:
                if len(v) != d:
                    raise ValidationError("malformed multiplication table")
        if len(self.unit) != d:
            raise ValidationError("malformed unit vector")
        for i in range(d):
            e = basis_vector(d, i, self.field.one)
            if self.mult_vv(self.unit, e) != e:
                raise ValidationError("unit law fails", (i,))
            if self.mult_vv(e, self.unit) != e:
                raise ValidationError("unit law fails", (i,))
        for i in range(d):
            for j in range(d):
                for l in range(d):
                    left = self.mult_vb(self.mult[i][j], l)
                    right = self.mult_bv(i, self.mult[j][l])
                    if left != right:
                        raise ValidationError("non-associative", (i, j, l))

    # -- products ------------------------------------------------------

    def mult_bb(self, i, j):
        return self.mult[i][j]

    def mult_bv(self, i, v):
        acc = [0] * self.dim
        for j, c in enumerate(v):
            if c:
                for k, w in self._prod[i][j]:
                    acc[k] += c * w
        return tuple(acc)

    def mult_vb(self, v, j):
        acc = [0] * self.dim
        for i, c in enumerate(v):
            if c:
                for k, w in self._prod[i][j]:
                    acc[k] += c * w
        return tuple(acc)

    def mult_vv(self, u, v):
        acc = [0] * self.dim
        prod = self._prod
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        c = a * b
                        for k, w in prod[i][j]:
                            acc[k] += c * w
        return tuple(acc)

    @property
    def is_commutative(self):
        return self._commutative

    def basis(self, i):
        return basis_vector(self.dim, i, self.field.one)

    def describe(self, v):
        terms = [f"{c}*{self.labels[i]}" for i, c in enumerate(v) if c != 0]
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"FiniteAlgebra(dim {self.dim} over {self.field})"


class Triple:
    """(A, B, eps) with B commutative and eps: B -> A landing in the center."""

    __slots__ = ("A", "B", "field", "eps_cols", "_eps_sparse")

    def __init__(self, A, B, eps_cols, validate=True):
        if A.field is not B.field:
            raise ValidationError("A and B over different fields")
        self.A = A
        self.B = B
        self.field = A.field
        self.eps_cols = tuple(
            tuple(A.field(c) for c in col) for col in eps_cols
        )
        self._eps_sparse = tuple(sparse_items(col) for col in self.eps_cols)
        if validate:
            self._validate()

    def _validate(self):
        A, B = self.A, self.B
        if len(self.eps_cols) != B.dim or any(len(c) != A.dim for c in self.eps_cols):
            raise ValidationError("malformed eps matrix")
        if not B.is_commutative:
            raise ValidationError("B not commutative")
        if self.eps(B.unit) != A.unit:
            raise ValidationError("eps not unital")
        for i in range(B.dim):
            for j in range(B.dim):
                lhs = self.eps(B.mult[i][j])
                rhs = A.mult_vv(self.eps_cols[i], self.eps_cols[j])
                if lhs != rhs:
                    raise ValidationError("eps not multiplicative", (i, j))
        for j in range(B.dim):
            img = self.eps_cols[j]
            for i in range(A.dim):
                if A.mult_vb(img, i) != A.mult_bv(i, img):
                    raise ValidationError("image not central", (j, i))

    def eps(self, b_vec):
        """Image in A of a coordinate vector over B."""
        acc = [0] * self.A.dim
        for j, c in enumerate(b_vec):
            if c:
                for k, w in self._eps_sparse[j]:
                    acc[k] += c * w
        return tuple(acc)

    def eps_basis(self, j):
        return self.eps_cols[j]

    def eps_matrix(self):
        entries = {}
        for j, col in enumerate(self.eps_cols):
            for i, c in enumerate(col):
                if c != 0:
                    entries[(i, j)] = c
        return Matrix(self.A.dim, self.B.dim, self.field, entries)

    def __repr__(self):
        return f"Triple(A dim {self.A.dim}, B dim {self.B.dim} over {self.field})"


class Bimodule:
    """A-bimodule with eps-central actions.

    left[i] / right[i] are m x m matrices (rows of rows); column t of left[i]
    is the coordinate vector of e_i . m_t, column t of right[i] that of
    m_t . e_i.
    """

    __slots__ = (
        "triple",
        "dim",
        "left",
        "right",
        "_lsp",
        "_rsp",
        "_symmetric",
    )

    def __init__(self, triple, left, right, validate=True):
        self.triple = triple
        f = triple.field
        m = len(left[0]) if left else 0
        self.dim = m
        self.left = tuple(
            tuple(tuple(f(c) for c in row) for row in tbl) for tbl in left
        )
        self.right = tuple(
            tuple(tuple(f(c) for c in row) for row in tbl) for tbl in right
        )
        # column-sparse views: _lsp[i][t] = [(s, c)] with e_i.m_t = sum c m_s
        self._lsp = tuple(
            tuple(
                tuple((s, tbl[s][t]) for s in range(m) if tbl[s][t] != 0)
                for t in range(m)
            )
            for tbl in self.left
        )
        self._rsp = tuple(
            tuple(
                tuple((s, tbl[s][t]) for s in range(m) if tbl[s][t] != 0)
                for t in range(m)
            )
            for tbl in self.right
        )
        self._symmetric = self.left == self.right
        if validate:
            self._validate()

    @classmethod
    def regular(cls, triple):
        """M = A with multiplication actions."""
        A = triple.A
        d = A.dim
        left = [
            [[A.mult[i][t][s] for t in range(d)] for s in range(d)]
            for i in range(d)
        ]
        right = [
            [[A.mult[t][i][s] for t in range(d)] for s in range(d)]
            for i in range(d)
        ]
        return cls(triple, left, right)

    @classmethod
    def zero(cls, triple):
        d = triple.A.dim
        return cls(triple, [[] for _ in range(d)], [[] for _ in range(d)])

    def _validate(self):
        A = self.triple.A
        d = A.dim
        m = self.dim
        for tables, name in ((self.left, "left"), (self.right, "right")):
            if len(tables) != d:
                raise ValidationError(f"malformed {name} action tables")
            for tbl in tables:
                if len(tbl) != m or any(len(r) != m for r in tbl):
                    raise ValidationError(f"malformed {name} action tables")
        if m == 0:
            return
        for t in range(m):
            mt = basis_vector(m, t, self.triple.field.one)
            if self.act_left(A.unit, mt) != mt:
                raise ValidationError("unit does not act as identity (left)", (t,))
            if self.act_right(mt, A.unit) != mt:
                raise ValidationError("unit does not act as identity (right)", (t,))
        for i in range(d):
            for j in range(d):
                eij = A.mult[i][j]
                for t in range(m):
                    mt = basis_vector(m, t, self.triple.field.one)
                    if self.act_left_basis(i, self.act_left_basis(j, mt)) != self.act_left(eij, mt):
                        raise ValidationError("left action not associative", (i, j, t))
                    if self.act_right_basis(self.act_right_basis(mt, i), j) != self.act_right(mt, eij):
                        raise ValidationError("right action not associative", (i, j, t))
                    if self.act_left_basis(i, self.act_right_basis(mt, j)) != self.act_right_basis(
                        self.act_left_basis(i, mt), j
                    ):
                        raise ValidationError("left and right actions do not commute", (i, j, t))
        for k in range(self.triple.B.dim):
            img = self.triple.eps_basis(k)
            for t in range(m):
                mt = basis_vector(m, t, self.triple.field.one)
                if self.act_left(img, mt) != self.act_right(mt, img):
                    raise ValidationError("epsilon-centrality fails", (k, t))

    # -- actions -------------------------------------------------------

    def act_left_basis(self, i, m_vec):
        acc = [0] * self.dim
        cols = self._lsp[i]
        for t, c in enumerate(m_vec):
            if c:
                for s, w in cols[t]:
                    acc[s] += c * w
        return tuple(acc)

    def act_right_basis(self, m_vec, i):
        acc = [0] * self.dim
        cols = self._rsp[i]
        for t, c in enumerate(m_vec):
            if c:
                for s, w in cols[t]:
                    acc[s] += c * w
        return tuple(acc)

    def act_left(self, a_vec, m_vec):
        acc = [0] * self.dim
        for i, a in enumerate(a_vec):
            if a:
                cols = self._lsp[i]
                for t, c in enumerate(m_vec):
                    if c:
                        ac = a * c
                        for s, w in cols[t]:
                            acc[s] += ac * w
        return tuple(acc)

    def act_right(self, m_vec, a_vec):
        acc = [0] * self.dim
        for i, a in enumerate(a_vec):
            if a:
                cols = self._rsp[i]
                for t, c in enumerate(m_vec):
                    if c:
                        ac = a * c
                        for s, w in cols[t]:
                            acc[s] += ac * w
        return tuple(acc)

    def act_left_sparse(self, a_sparse, m_vec):
        acc = [0] * self.dim
        for i, a in a_sparse:
            cols = self._lsp[i]
            for t, c in enumerate(m_vec):
                if c:
                    ac = a * c
                    for s, w in cols[t]:
                        acc[s] += ac * w
        return tuple(acc)

    def act_right_sparse(self, m_vec, a_sparse):
        acc = [0] * self.dim
        for i, a in a_sparse:
            cols = self._rsp[i]
            for t, c in enumerate(m_vec):
                if c:
                    ac = a * c
                    for s, w in cols[t]:
                        acc[s] += ac * w
        return tuple(acc)

    @property
    def is_symmetric(self):
        return self._symmetric

    def is_regular(self):
        """True when this is A acting on itself by multiplication."""
        A = self.triple.A
        if self.dim != A.dim:
            return False
        d = A.dim
        for i in range(d):
            for t in range(d):
                if self.act_left_basis(i, A.basis(t)) != A.mult[i][t]:
                    return False
                if self.act_right_basis(A.basis(t), i) != A.mult[t][i]:
                    return False
        return True

    def __repr__(self):
        return f"Bimodule(dim {self.dim} over {self.triple.field})"


class LinearMap:
    """k-linear map between coordinate spaces; cols[j] = image of e_j."""

    __slots__ = ("src_dim", "tgt_dim", "cols")

    def __init__(self, src_dim, tgt_dim, cols):
        self.src_dim = src_dim
        self.tgt_dim = tgt_dim
        self.cols = tuple(tuple(c) for c in cols)
        if len(self.cols) != src_dim or any(len(c) != tgt_dim for c in self.cols):
            raise ValidationError("linear map shape mismatch")

    @classmethod
    def zero(cls, src_dim, tgt_dim):
        return cls(src_dim, tgt_dim, [vzero(tgt_dim)] * src_dim)

    @classmethod
    def from_flat(cls, src_dim, tgt_dim, flat):
        cols = [tuple(flat[j * tgt_dim : (j + 1) * tgt_dim]) for j in range(src_dim)]
        return cls(src_dim, tgt_dim, cols)

    def to_flat(self):
        out = []
        for c in self.cols:
            out.extend(c)
        return tuple(out)

    def apply(self, vec):
        acc = [0] * self.tgt_dim
        for j, c in enumerate(vec):
            if c:
                vaddto(acc, c, self.cols[j])
        return tuple(acc)

    def __add__(self, other):
        return LinearMap(
            self.src_dim, self.tgt_dim, [vadd(a, b) for a, b in zip(self.cols, other.cols)]
        )

    def __sub__(self, other):
        return LinearMap(
            self.src_dim, self.tgt_dim, [vsub(a, b) for a, b in zip(self.cols, other.cols)]
        )

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.cols == other.cols

    def __repr__(self):
        return f"LinearMap({self.src_dim} -> {self.tgt_dim})"


# ----------------------------------------------------------------------
# closed-form spaces


def invariant_submodule(triple, module):
    """M^A = {m : a.m = m.a for all a}, as a Subspace of the coordinates."""
    d = triple.A.dim
    m = module.dim
    if m == 0:
        return Subspace.zero(0, triple.field)
    entries = {}
    for i in range(d):
        for t in range(m):
            col = vsub(
                module.act_left_basis(i, basis_vector(m, t, triple.field.one)),
                module.act_right_basis(basis_vector(m, t, triple.field.one), i),
            )
            for r, c in enumerate(col):
                if c != 0:
                    entries[(i * m + r, t)] = c
    return nullspace(Matrix(d * m, m, triple.field, entries))


def _derivation_constraints(alg, act_left_basis, act_right_basis, mdim, field):
    """Leibniz constraints d(e_i e_j) = e_i d(e_j) + d(e_i) e_j as a sparse
    matrix over the flattened map coordinates x[j*m + t]."""
    d = alg.dim
    entries = {}
    one = field.one
    for i in range(d):
        for j in range(d):
            base = (i * d + j) * mdim
            for k, c in alg._prod[i][j]:
                for t in range(mdim):
                    key = (base + t, k * mdim + t)
                    entries[key] = entries.get(key, 0) + c
            for t in range(mdim):
                lcol = act_left_basis(i, basis_vector(mdim, t, one))
                for r, c in enumerate(lcol):
                    if c != 0:
                        key = (base + r, j * mdim + t)
                        entries[key] = entries.get(key, 0) - c
                rcol = act_right_basis(basis_vector(mdim, t, one), j)
                for r, c in enumerate(rcol):
                    if c != 0:
                        key = (base + r, i * mdim + t)
                        entries[key] = entries.get(key, 0) - c
    entries = {k: v for k, v in entries.items() if v != 0}
    return Matrix(d * d * mdim, d * mdim, field, entries)


def derivation_space(triple, module, kind="all"):
    """Subspace of flattened LinearMaps.

    kind='all'      Der_k(A, M)
    kind='B-linear' derivations with d(eps(B)) = 0
    kind='inner'    {a -> a.m - m.a}
    kind='on-B'     Der_k(B, M) for the B-module structure through eps
    """
    field = triple.field
    m = module.dim
    if kind == "on-B":
        B = triple.B
        # b.m := eps(b) m ; the two sides agree by eps-centrality, asserted in
        # the Bimodule validator.
        def lb(i, mv):
            return module.act_left(triple.eps_basis(i), mv)

        def rb(mv, i):
            return module.act_right(mv, triple.eps_basis(i))

        if m == 0:
            return Subspace.zero(0, field)
        return nullspace(_derivation_constraints(B, lb, rb, m, field))

    A = triple.A
    if m == 0:
        return Subspace.zero(0, field)
    if kind == "inner":
        vecs = []
        for t in range(m):
            mt = basis_vector(m, t, field.one)
            flat = []
            for j in range(A.dim):
                flat.extend(
                    vsub(
                        module.act_left_basis(j, mt),
                        module.act_right_basis(mt, j),
                    )
                )
            vecs.append(flat)
        return Subspace.from_vectors(vecs, A.dim * m, field)

    constraints = _derivation_constraints(
        A, module.act_left_basis, module.act_right_basis, m, field
    )
    if kind == "all":
        return nullspace(constraints)
    if kind == "B-linear":
        extra = {}
        nrows = constraints.nrows
        row = nrows
        for k in range(triple.B.dim):
            img = triple.eps_basis(k)
            for t in range(m):
                for j, c in enumerate(img):
                    if c != 0:
                        extra[(row, j * m + t)] = c
                row += 1
        entries = {}
        for i, r in constraints.rows.items():
            for j, v in r.items():
                entries[(i, j)] = v
        entries.update(extra)
        return nullspace(Matrix(row, A.dim * m, field, entries))
    raise ValueError(f"unknown derivation kind {kind!r}")


def is_derivation(triple, module, w, on_b=False):
    alg = triple.B if on_b else triple.A
    one = triple.field.one
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = w.apply(alg.mult[i][j])
            if on_b:
                rhs = vadd(
                    module.act_left(triple.eps_basis(i), w.apply(alg.basis(j))),
                    module.act_right(w.apply(alg.basis(i)), triple.eps_basis(j)),
                )
            else:
                rhs = vadd(
                    module.act_left_basis(i, w.apply(alg.basis(j))),
                    module.act_right_basis(w.apply(alg.basis(i)), j),
                )
            if lhs != rhs:
                return False
    return True


def pullback_derivation(triple, module, w):
    """w o eps for w in Der_k(A, M); lands in Der_k(B, M)."""
    if not is_derivation(triple, module, w):
        raise ValidationError("not a derivation")
    cols = [w.apply(triple.eps_basis(k)) for k in range(triple.B.dim)]
    return LinearMap(triple.B.dim, module.dim, cols)


def pullback_image(triple, module):
    """eps^*(Der_k(A, M)) as a Subspace of flattened maps B -> M."""
    der = derivation_space(triple, module, kind="all")
    m = module.dim
    vecs = []
    for flat in der.basis_vectors():
        w = LinearMap.from_flat(triple.A.dim, m, flat)
        vecs.append(pullback_derivation(triple, module, w).to_flat())
    return Subspace.from_vectors(vecs, triple.B.dim * m, triple.field)
