"""Sparse exact matrices and echelon subspaces.

Matrices are stored sparsely (dict of rows, no explicit zeros); elimination
streams dense integer rows into the selected kernel, so the 25%-fill dense
export only ever materializes one row at a time.  All operations are pure;
values are immutable after construction.
"""

from fractions import Fraction

from secohom.fields import QQ, GFElement
from secohom.errors import ValidationError
from secohom.linalg import _kernel


def _lcm(a, b):
    from math import gcd

    return a // gcd(a, b) * b


class Matrix:
    """Sparse matrix over Q or GF(p).  rows: dict row -> dict col -> scalar."""

    __slots__ = ("nrows", "ncols", "field", "rows")

    def __init__(self, nrows, ncols, field, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        rows = {}
        if entries:
            for (i, j), v in entries.items():
                if v == 0:
                    continue
                if not (0 <= i < nrows and 0 <= j < ncols):
                    raise IndexError((i, j))
                rows.setdefault(i, {})[j] = v
        self.rows = rows

    @classmethod
    def from_rows(cls, data, field, ncols=None):
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        m = cls(len(data), ncols, field)
        for i, r in enumerate(data):
            if len(r) != ncols:
                raise ValueError("ragged rows")
            row = {j: v for j, v in enumerate(r) if v != 0}
            if row:
                m.rows[i] = row
        return m

    @classmethod
    def identity(cls, n, field):
        return cls(n, n, field, {(i, i): field.one for i in range(n)})

    def __getitem__(self, ij):
        i, j = ij
        return self.rows.get(i, {}).get(j, self.field.zero)

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    def fill(self):
        cells = self.nrows * self.ncols
        return self.nnz() / cells if cells else 0.0

    def is_zero(self):
        return not self.rows

    def transpose(self):
        t = Matrix(self.ncols, self.nrows, self.field)
        for i, row in self.rows.items():
            for j, v in row.items():
                t.rows.setdefault(j, {})[i] = v
        return t

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = Matrix(self.nrows, other.ncols, self.field)
        orows = other.rows
        for i, row in self.rows.items():
            acc = {}
            for k, v in row.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for j, w in brow.items():
                    acc[j] = acc.get(j, 0) + v * w
            acc = {j: v for j, v in acc.items() if v != 0}
            if acc:
                out.rows[i] = acc
        return out

    def apply(self, vec):
        """Matrix-vector product; vec is a sequence of length ncols."""
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch")
        out = [self.field.zero] * self.nrows
        for i, row in self.rows.items():
            s = self.field.zero
            for j, v in row.items():
                s = s + v * vec[j]
            out[i] = s
        return out

    def to_dense(self):
        zero = self.field.zero
        out = []
        for i in range(self.nrows):
            row = self.rows.get(i, {})
            out.append([row.get(j, zero) for j in range(self.ncols)])
        return out

    def _int_rows(self):
        """Dense integer rows for the kernel (denominators cleared per row
        over Q, residues lifted over GF(p))."""
        if self.field.char == 0:
            for i in range(self.nrows):
                row = self.rows.get(i)
                out = [0] * self.ncols
                if row:
                    den = 1
                    for v in row.values():
                        if isinstance(v, Fraction):
                            den = _lcm(den, v.denominator)
                    for j, v in row.items():
                        out[j] = int(v * den)
                yield out
        else:
            for i in range(self.nrows):
                row = self.rows.get(i)
                out = [0] * self.ncols
                if row:
                    for j, v in row.items():
                        out[j] = v.v if isinstance(v, GFElement) else v
                yield out

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field}, nnz={self.nnz()})"


def _rref_int_vectors(int_rows, ncols, field):
    if field.char == 0:
        return _kernel.rref_int(int_rows, ncols)
    return _kernel.rref_mod(int_rows, ncols, field.char)


class Subspace:
    """A subspace of field^ambient held as a canonical reduced echelon basis.

    Over Q rows are primitive integer vectors with positive pivot entries;
    over GF(p) rows are monic.  Canonical means: two Subspace objects are
    equal iff their row data are equal.
    """

    __slots__ = ("ambient", "field", "rows", "pivots")

    def __init__(self, ambient, field, rows, pivots):
        self.ambient = ambient
        self.field = field
        self.rows = [tuple(r) for r in rows]
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, vectors, ambient, field):
        m = Matrix.from_rows(vectors, field, ncols=ambient) if vectors else None
        if m is None:
            return cls(ambient, field, [], [])
        rows, pivots = _rref_int_vectors(m._int_rows(), ambient, field)
        return cls(ambient, field, rows, pivots)

    @classmethod
    def zero(cls, ambient, field):
        return cls(ambient, field, [], [])

    @classmethod
    def full(cls, ambient, field):
        rows = []
        for i in range(ambient):
            r = [0] * ambient
            r[i] = 1
            rows.append(r)
        return cls(ambient, field, rows, range(ambient))

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        """Canonical residue of vec modulo this subspace (zeros in all pivot
        columns).  Exact; result entries are field scalars."""
        v = list(vec)
        if self.field.char == 0:
            for row, pc in zip(self.rows, self.pivots):
                c = v[pc]
                if c:
                    q = Fraction(c, row[pc]) if not isinstance(c, Fraction) else c / row[pc]
                    for j in range(pc, self.ambient):
                        if row[j]:
                            v[j] = v[j] - q * row[j]
        else:
            p = self.field.char
            for row, pc in zip(self.rows, self.pivots):
                c = v[pc]
                cv = c.v if isinstance(c, GFElement) else c % p
                if cv:
                    for j in range(pc, self.ambient):
                        if row[j]:
                            v[j] = v[j] - cv * row[j]
        return tuple(v)

    def contains(self, vec):
        return all(x == 0 for x in self.reduce(vec))

    def basis_vectors(self):
        """Rows rescaled to monic pivots (field scalars)."""
        out = []
        for row, pc in zip(self.rows, self.pivots):
            d = row[pc]
            if d == 1:
                out.append(tuple(row))
            elif self.field.char == 0:
                out.append(tuple(QQ(Fraction(x, d)) for x in row))
            else:
                out.append(tuple(self.field(x) / self.field(d) for x in row))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.field is other.field
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient} over {self.field})"


def rref(m):
    """Canonical echelon rows and pivot columns of a Matrix."""
    return _rref_int_vectors(m._int_rows(), m.ncols, m.field)


def rank(m):
    return len(rref(m)[1])


def row_space(m):
    rows, pivots = rref(m)
    return Subspace(m.ncols, m.field, rows, pivots)


def column_space(m):
    return row_space(m.transpose())


def nullspace(m):
    """Basis of {v : m v = 0} as a Subspace of field^ncols."""
    rows, pivots = rref(m)
    n = m.ncols
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    basis = []
    if m.field.char == 0:
        for f in free:
            v = [Fraction(0)] * n
            v[f] = Fraction(1)
            for row, pc in zip(rows, pivots):
                if row[f]:
                    v[pc] = Fraction(-row[f], row[pc])
            basis.append(v)
    else:
        p = m.field.char
        for f in free:
            v = [0] * n
            v[f] = 1
            for row, pc in zip(rows, pivots):
                if row[f]:
                    v[pc] = (-row[f] * pow(row[pc], p - 2, p)) % p
            basis.append(v)
    out = Subspace.from_vectors(basis, n, m.field)
    assert out.dim == len(free)
    return out


def solve(m, b):
    """Some x with m x = b, or None when b is outside the column space."""
    if len(b) != m.nrows:
        raise ValueError("shape mismatch")
    n = m.ncols
    field = m.field
    if field.char == 0:
        # Augment before clearing denominators so each row of [m | b] is
        # scaled by one common factor.
        aug = []
        sparse = m.rows
        for i in range(m.nrows):
            row = sparse.get(i, {})
            den = 1
            v = b[i]
            if isinstance(v, Fraction):
                den = v.denominator
            for w in row.values():
                if isinstance(w, Fraction):
                    den = _lcm(den, w.denominator)
            out = [0] * (n + 1)
            for j, w in row.items():
                out[j] = int(w * den)
            out[n] = int(v * den)
            aug.append(out)
        rows, pivots = _kernel.rref_int(aug, n + 1)
    else:
        p = field.char
        aug = []
        for i, row in enumerate(m._int_rows()):
            v = b[i]
            vv = v.v if isinstance(v, GFElement) else v % p
            aug.append(row + [vv])
        rows, pivots = _kernel.rref_mod(aug, n + 1, p)
    if n in pivots:
        return None
    x = [field.zero] * n
    if field.char == 0:
        for row, pc in zip(rows, pivots):
            x[pc] = QQ(Fraction(row[n], row[pc]))
    else:
        for row, pc in zip(rows, pivots):
            x[pc] = field(row[n]) / field(row[pc])
    return tuple(x)


def quotient_dim(total, sub):
    """dim(total) - dim(sub), after verifying sub really is a subspace of
    total."""
    if total.ambient != sub.ambient:
        raise ValueError("ambient dimension mismatch")
    for row in sub.rows:
        if not total.contains(row):
            raise ValidationError("not a subspace")
    return total.dim - sub.dim
