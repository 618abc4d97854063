"""Cochain complexes of a triple: the canonical tensor basis, the secondary
and ordinary differentials, cohomology with canonical representatives, the
comparison map into the ordinary complex, and the chi map on derivations.

Basis bookkeeping
-----------------
A degree-n basis element is a "tensor matrix": n diagonal entries from the
A-basis and one strictly-upper entry from the B-basis for each pair
(i, j), i < j, in the order (0,1), (0,2), ..., (0,n-1), (1,2), ...  Linear
offsets are mixed-radix with diagonal digits most significant.  The ordinary
complex is the same machinery with no pair digits; its differential is an
independent implementation used as an oracle for the B = k case.

Evaluation of a cochain on a tensor whose entries are linear combinations
(products of basis elements that fanned out through structure constants)
goes through ``_expand``: each non-basis slot contributes its sparse support
and the result is a weighted sum of table lookups.
"""

import itertools
from fractions import Fraction

from secohom.algebra import Bimodule, LinearMap, is_derivation
from secohom.errors import PreconditionError, SizeCapExceeded, ValidationError
from secohom.linalg import Matrix, Subspace, column_space, nullspace, rank, solve
from secohom.vectors import is_zero, sparse_items, vaddto, vadd, vsub, vzero

DEFAULT_MAX_BASIS = 2**21


class TensorBasis:
    """Offset codec for A^(x)n (x) B^(x)npairs."""

    __slots__ = ("n", "dA", "dB", "npairs", "pairs", "pair_slot", "count", "wA", "wB")

    def __init__(self, n, dA, dB, with_pairs=True):
        self.n = n
        self.dA = dA
        self.dB = dB
        if with_pairs:
            self.pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
        else:
            self.pairs = ()
        self.npairs = len(self.pairs)
        self.pair_slot = {p: k for k, p in enumerate(self.pairs)}
        P = self.npairs
        self.count = dA**n * dB**P
        self.wA = tuple(dA ** (n - 1 - i) * dB**P for i in range(n))
        self.wB = tuple(dB ** (P - 1 - k) for k in range(P))

    def offset(self, diag, pair_digits):
        off = 0
        for w, d in zip(self.wA, diag):
            off += w * d
        for w, d in zip(self.wB, pair_digits):
            off += w * d
        return off

    def decode(self, off):
        diag = []
        for w in self.wA:
            diag.append(off // w)
            off %= w
        pair_digits = []
        for w in self.wB:
            pair_digits.append(off // w)
            off %= w
        if off:
            raise IndexError("offset out of range")
        return tuple(diag), tuple(pair_digits)

    def __iter__(self):
        """Yields (offset, diag, pair_digits) in offset order."""
        ranges = [range(self.dA)] * self.n + [range(self.dB)] * self.npairs
        n = self.n
        for off, digits in enumerate(itertools.product(*ranges)):
            yield off, digits[:n], digits[n:]


class Cochain:
    """Element of C^n; table maps basis offset -> coordinate vector in M."""

    __slots__ = ("complex", "degree", "table")

    def __init__(self, cx, degree, table, _freeze=True):
        self.complex = cx
        self.degree = degree
        self.table = tuple(tuple(v) for v in table) if _freeze else table
        if len(self.table) != cx.basis(degree).count:
            raise ValidationError("cochain table has wrong length")

    def _like(self, other):
        if self.complex is not other.complex or self.degree != other.degree:
            raise ValueError("cochains over different complexes or degrees")

    def __add__(self, other):
        self._like(other)
        return Cochain(
            self.complex,
            self.degree,
            [vadd(a, b) for a, b in zip(self.table, other.table)],
            _freeze=False,
        )

    def __sub__(self, other):
        self._like(other)
        return Cochain(
            self.complex,
            self.degree,
            [vsub(a, b) for a, b in zip(self.table, other.table)],
            _freeze=False,
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return Cochain(
            self.complex,
            self.degree,
            [tuple(c * x for x in v) for v in self.table],
            _freeze=False,
        )

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.complex is other.complex
            and self.degree == other.degree
            and all(
                all(x == y for x, y in zip(a, b))
                for a, b in zip(self.table, other.table)
            )
        )

    def is_zero(self):
        return all(is_zero(v) for v in self.table)

    def vector(self):
        """Flat coordinates, offset-major, module coordinate minor."""
        out = []
        for v in self.table:
            out.extend(v)
        return tuple(out)

    def nnz(self):
        return sum(1 for v in self.table if not is_zero(v))

    def __repr__(self):
        return f"Cochain(degree {self.degree}, {self.nnz()} nonzero of {len(self.table)})"


class CohomologySpace:
    """ker/im data at one degree plus canonical class representatives."""

    __slots__ = ("complex", "degree", "dim", "representatives", "cocycles", "coboundaries")

    def __init__(self, cx, degree, dim, representatives, cocycles, coboundaries):
        self.complex = cx
        self.degree = degree
        self.dim = dim
        self.representatives = representatives
        self.cocycles = cocycles
        self.coboundaries = coboundaries

    def class_form(self, f):
        """Canonical form of a cocycle's class: residue modulo coboundaries.
        Equal classes have equal forms."""
        return self.coboundaries.reduce(f.vector())

    def __repr__(self):
        return f"CohomologySpace(degree {self.degree}, dim {self.dim})"


class PhiData:
    """The induced comparison map on one cohomology degree."""

    __slots__ = ("degree", "matrix", "dim_domain", "dim_codomain", "dim_kernel", "dim_image")

    def __init__(self, degree, matrix, dim_domain, dim_codomain, dim_kernel, dim_image):
        self.degree = degree
        self.matrix = matrix
        self.dim_domain = dim_domain
        self.dim_codomain = dim_codomain
        self.dim_kernel = dim_kernel
        self.dim_image = dim_image

    def __repr__(self):
        return (
            f"PhiData(degree {self.degree}, H_sec {self.dim_domain} -> "
            f"H_ord {self.dim_codomain}, ker {self.dim_kernel})"
        )


class CochainComplex:
    """C^*((A,B,eps); M) (flavor='secondary') or C^*(A; M) (flavor='ordinary')."""

    def __init__(self, triple, module, flavor="secondary", max_basis=DEFAULT_MAX_BASIS):
        if module.triple is not triple:
            raise ValidationError("module does not belong to this triple")
        if flavor not in ("secondary", "ordinary"):
            raise ValueError(flavor)
        self.triple = triple
        self.module = module
        self.flavor = flavor
        self.field = triple.field
        self.max_basis = max_basis
        self._bases = {}
        self._matrices = {}
        self._cohomology = {}
        self._bprod_cache = {}
        self._weight_cache = {}
        self._cache = {}
        self._ordinary = None

    # -- basis ---------------------------------------------------------

    def basis(self, n):
        tb = self._bases.get(n)
        if tb is None:
            dA = self.triple.A.dim
            dB = self.triple.B.dim
            with_pairs = self.flavor == "secondary"
            probe = TensorBasis(n, dA, dB, with_pairs)
            if probe.count > self.max_basis:
                raise SizeCapExceeded(probe.count, self.max_basis)
            tb = self._bases[n] = probe
        return tb

    def basis_count(self, n):
        return self.basis(n).count

    def coord_dim(self, n):
        return self.basis(n).count * self.module.dim

    @property
    def ordinary(self):
        """The ordinary Hochschild complex of (A, M); used by the comparison
        map and as an independent oracle."""
        if self.flavor == "ordinary":
            return self
        if self._ordinary is None:
            self._ordinary = CochainComplex(
                self.triple, self.module, flavor="ordinary", max_basis=self.max_basis
            )
        return self._ordinary

    # -- constructors ----------------------------------------------------

    def zero(self, n):
        z = vzero(self.module.dim)
        return Cochain(self, n, [z] * self.basis(n).count, _freeze=False)

    def cochain(self, n, table):
        return Cochain(self, n, table)

    def from_vector(self, n, vec):
        m = self.module.dim
        count = self.basis(n).count
        if len(vec) != count * m:
            raise ValidationError("coordinate vector has wrong length")
        table = [tuple(vec[k * m : (k + 1) * m]) for k in range(count)]
        return Cochain(self, n, table, _freeze=False)

    def random(self, n, rng, bound=3):
        m = self.module.dim
        f = self.field
        if f.char == 0:
            table = [
                tuple(rng.randint(-bound, bound) for _ in range(m))
                for _ in range(self.basis(n).count)
            ]
        else:
            table = [
                tuple(f(rng.randrange(f.char)) for _ in range(m))
                for _ in range(self.basis(n).count)
            ]
        return Cochain(self, n, table, _freeze=False)

    def identity_cochain(self):
        """id_A as a 1-cochain; needs M = A."""
        if not self.module.is_regular():
            raise PreconditionError("coefficients must be A")
        A = self.triple.A
        return Cochain(self, 1, [A.basis(i) for i in range(A.dim)], _freeze=False)

    # -- evaluation ------------------------------------------------------

    def _bprod(self, factors):
        """Product of B-basis elements as a sparse vector [(idx, coef)].
        B is commutative, so the cache key is the sorted factor multiset."""
        key = tuple(sorted(factors))
        out = self._bprod_cache.get(key)
        if out is None:
            B = self.triple.B
            cur = ((key[0], self.field.one),)
            for nxt in key[1:]:
                acc = {}
                for i, c in cur:
                    for k, w in B._prod[i][nxt]:
                        acc[k] = acc.get(k, 0) + c * w
                cur = tuple((k, v) for k, v in acc.items() if v != 0)
                if not cur:
                    break
            out = self._bprod_cache[key] = cur
        return out

    def _eps_weight(self, a_idx, bfactors):
        """a . eps(prod of B basis elements) as a sparse A-vector; this is the
        left/right scalar weight in the outer differential terms."""
        key = (a_idx, tuple(sorted(bfactors)))
        out = self._weight_cache.get(key)
        if out is None:
            T = self.triple
            if key[1]:
                acc = {}
                for bi, c in self._bprod(key[1]):
                    for k, w in T._eps_sparse[bi]:
                        acc[k] = acc.get(k, 0) + c * w
                evec = [0] * T.A.dim
                for k, v in acc.items():
                    evec[k] = v
                out = tuple(sparse_items(T.A.mult_bv(a_idx, evec)))
            else:
                out = ((a_idx, self.field.one),)
            out = self._weight_cache.setdefault(key, out)
        return out

    def _expand(self, tb, diag_entries, pair_entries):
        """Expand a symbolic tensor into [(offset, coef)].

        Entries are either a basis index (int) or a sparse [(idx, coef), ...]
        expansion; the result enumerates all basis tensors in the multilinear
        expansion with their coefficients.
        """
        base = 0
        slots = []
        for w, e in zip(tb.wA, diag_entries):
            if type(e) is int:
                base += w * e
            else:
                if not e:
                    return ()
                slots.append((w, e))
        for w, e in zip(tb.wB, pair_entries):
            if type(e) is int:
                base += w * e
            else:
                if not e:
                    return ()
                slots.append((w, e))
        if not slots:
            return ((base, self.field.one),)
        out = []
        one = self.field.one

        def rec(k, off, coef):
            if k == len(slots):
                out.append((off, coef))
                return
            w, items = slots[k]
            for idx, c in items:
                rec(k + 1, off + w * idx, coef * c)

        rec(0, base, one)
        return out

    def evaluate(self, f, diag_entries, pair_entries):
        """f applied to a symbolic tensor (entries: basis index or sparse)."""
        tb = self.basis(f.degree)
        acc = [0] * self.module.dim
        for off, coef in self._expand(tb, diag_entries, pair_entries):
            val = f.table[off]
            vaddto(acc, coef, val)
        return tuple(acc)

    # -- sub-index helpers ------------------------------------------------

    def _sub_slots(self, n):
        """Pair-slot translation tables between degree n+1 and n, plus the
        first-row and last-column slot lists of degree n+1."""
        key = ("sub", n)
        out = self._cache.get(key)
        if out is None:
            hi = self.basis(n + 1)
            lo = self.basis(n)
            lo_slots = tuple(hi.pair_slot[(i, j)] for (i, j) in lo.pairs)
            hi_slots = tuple(hi.pair_slot[(i + 1, j + 1)] for (i, j) in lo.pairs)
            row0 = tuple(hi.pair_slot[(0, j)] for j in range(1, n + 1))
            lastcol = tuple(hi.pair_slot[(i, n)] for i in range(n))
            out = self._cache[key] = (lo_slots, hi_slots, row0, lastcol)
        return out

    def _merged_diag(self, b_idx, a1_idx, a2_idx):
        """eps(b) . a1 . a2 as a sparse A-vector (the merged diagonal entry)."""
        key = ("md", b_idx, a1_idx, a2_idx)
        out = self._cache.get(key)
        if out is None:
            T = self.triple
            A = T.A
            prod = A.mult_vv(T.eps_basis(b_idx), A.mult[a1_idx][a2_idx])
            out = self._cache[key] = tuple(sparse_items(prod))
        return out

    def collapse(self, n_from, diag, pair_digits, start, size, merged_entry):
        """Entries of the degree-(n_from - size + 1) tensor obtained from a
        degree-n_from basis tensor by collapsing the contiguous diagonal
        block [start, start+size) into one slot carrying merged_entry.

        Off-diagonal entries touching the merged slot become products of the
        B-entries across the block (empty products for size 0, where a fresh
        slot is inserted instead).
        """
        tb_from = self.basis(n_from)
        n_to = n_from - size + 1
        tb_to = self.basis(n_to)
        block = tuple(range(start, start + size))

        diag_entries = (
            [diag[r] for r in range(start)]
            + [merged_entry]
            + [diag[r] for r in range(start + size, n_from)]
        )

        def piece(r):
            if r < start:
                return (r,)
            if r == start:
                return block
            return (r + size - 1,)

        slot = tb_from.pair_slot
        pair_entries = []
        for (r, c) in tb_to.pairs:
            pr = piece(r)
            pc = piece(c)
            if len(pr) == 1 and len(pc) == 1:
                pair_entries.append(pair_digits[slot[(pr[0], pc[0])]])
            else:
                factors = [pair_digits[slot[(x, y)]] for x in pr for y in pc]
                if not factors:
                    pair_entries.append(tuple(sparse_items(self.triple.B.unit)))
                elif len(factors) == 1:
                    pair_entries.append(factors[0])
                else:
                    pair_entries.append(self._bprod(factors))
        return diag_entries, pair_entries

    # -- differentials -----------------------------------------------------

    def delta(self, f):
        """The differential applied to a cochain (degree n -> n+1)."""
        if f.complex is not self:
            raise ValueError("cochain over a different complex")
        if self.flavor == "secondary":
            return self._delta_secondary(f)
        return self._delta_ordinary(f)

    def _delta_secondary(self, f):
        n = f.degree
        mdim = self.module.dim
        hi = self.basis(n + 1)
        lo = self.basis(n)
        lo_slots, hi_slots, row0, lastcol = self._sub_slots(n)
        mod = self.module
        table = []
        ftab = f.table
        last_sign = 1 if (n + 1) % 2 == 0 else -1

        for off, diag, pairs in hi:
            acc = [0] * mdim

            # left outer term: a_1 eps(prod of first-row entries) . f(T^1)
            sub = lo.offset(diag[1:], [pairs[s] for s in hi_slots])
            val = ftab[sub]
            if not is_zero(val):
                w = self._eps_weight(diag[0], [pairs[s] for s in row0])
                if w:
                    vaddto(acc, 1, mod.act_left_sparse(w, val))

            # merged terms, sign (-1)^i for merge of rows i, i+1 (1-based)
            sign = -1
            for i in range(n):
                b_idx = pairs[hi.pair_slot[(i, i + 1)]]
                merged = self._merged_diag(b_idx, diag[i], diag[i + 1])
                de, pe = self.collapse(n + 1, diag, pairs, i, 2, merged)
                for soff, coef in self._expand(lo, de, pe):
                    val = ftab[soff]
                    if not is_zero(val):
                        vaddto(acc, coef if sign > 0 else -coef, val)
                sign = -sign

            # right outer term
            sub = lo.offset(diag[:n], [pairs[s] for s in lo_slots])
            val = ftab[sub]
            if not is_zero(val):
                w = self._eps_weight(diag[n], [pairs[s] for s in lastcol])
                if w:
                    vaddto(acc, last_sign, mod.act_right_sparse(val, w))

            table.append(tuple(acc))
        return Cochain(self, n + 1, table, _freeze=False)

    def _delta_ordinary(self, f):
        n = f.degree
        mdim = self.module.dim
        hi = self.basis(n + 1)
        lo = self.basis(n)
        mod = self.module
        A = self.triple.A
        ftab = f.table
        table = []
        last_sign = 1 if (n + 1) % 2 == 0 else -1

        for off, diag, _ in hi:
            acc = [0] * mdim

            sub = lo.offset(diag[1:], ())
            val = ftab[sub]
            if not is_zero(val):
                vaddto(acc, 1, mod.act_left_basis(diag[0], val))

            sign = -1
            for i in range(n):
                de = (
                    [diag[r] for r in range(i)]
                    + [A._prod[diag[i]][diag[i + 1]]]
                    + [diag[r] for r in range(i + 2, n + 1)]
                )
                for soff, coef in self._expand(lo, de, ()):
                    val = ftab[soff]
                    if not is_zero(val):
                        vaddto(acc, coef if sign > 0 else -coef, val)
                sign = -sign

            sub = lo.offset(diag[:n], ())
            val = ftab[sub]
            if not is_zero(val):
                vaddto(acc, last_sign, mod.act_right_basis(val, diag[n]))

            table.append(tuple(acc))
        return Cochain(self, n + 1, table, _freeze=False)

    def delta_matrix(self, n):
        """The differential C^n -> C^{n+1} as an exact sparse matrix on flat
        coordinates (offset-major, module-coordinate minor)."""
        mat = self._matrices.get(n)
        if mat is not None:
            return mat
        mdim = self.module.dim
        hi = self.basis(n + 1)
        lo = self.basis(n)
        entries = {}
        mod = self.module
        A = self.triple.A
        last_sign = 1 if (n + 1) % 2 == 0 else -1

        def add_action(rowbase, colbase, tables, weight_sparse, sign):
            for i, c in weight_sparse:
                tbl = tables[i]
                for r in range(mdim):
                    for t in range(mdim):
                        v = tbl[r][t]
                        if v != 0:
                            key = (rowbase + r, colbase + t)
                            entries[key] = entries.get(key, 0) + sign * c * v

        def add_scalar(rowbase, colbase, coef, sign):
            for r in range(mdim):
                key = (rowbase + r, colbase + r)
                entries[key] = entries.get(key, 0) + sign * coef

        if self.flavor == "secondary":
            lo_slots, hi_slots, row0, lastcol = self._sub_slots(n)
            for off, diag, pairs in hi:
                rowbase = off * mdim
                sub = lo.offset(diag[1:], [pairs[s] for s in hi_slots])
                add_action(
                    rowbase, sub * mdim, mod.left,
                    self._eps_weight(diag[0], [pairs[s] for s in row0]), 1,
                )
                sign = -1
                for i in range(n):
                    b_idx = pairs[hi.pair_slot[(i, i + 1)]]
                    merged = self._merged_diag(b_idx, diag[i], diag[i + 1])
                    de, pe = self.collapse(n + 1, diag, pairs, i, 2, merged)
                    for soff, coef in self._expand(lo, de, pe):
                        add_scalar(rowbase, soff * mdim, coef, sign)
                    sign = -sign
                sub = lo.offset(diag[:n], [pairs[s] for s in lo_slots])
                add_action(
                    rowbase, sub * mdim, mod.right,
                    self._eps_weight(diag[n], [pairs[s] for s in lastcol]),
                    last_sign,
                )
        else:
            one = self.field.one
            for off, diag, _ in hi:
                rowbase = off * mdim
                sub = lo.offset(diag[1:], ())
                add_action(rowbase, sub * mdim, mod.left, ((diag[0], one),), 1)
                sign = -1
                for i in range(n):
                    de = (
                        [diag[r] for r in range(i)]
                        + [A._prod[diag[i]][diag[i + 1]]]
                        + [diag[r] for r in range(i + 2, n + 1)]
                    )
                    for soff, coef in self._expand(lo, de, ()):
                        add_scalar(rowbase, soff * mdim, coef, sign)
                    sign = -sign
                sub = lo.offset(diag[:n], ())
                add_action(rowbase, sub * mdim, mod.right, ((diag[n], one),), last_sign)

        entries = {k: v for k, v in entries.items() if v != 0}
        mat = Matrix(self.coord_dim(n + 1), self.coord_dim(n), self.field, entries)
        self._matrices[n] = mat
        return mat

    # -- cohomology --------------------------------------------------------

    def cocycles(self, n):
        return nullspace(self.delta_matrix(n))

    def coboundaries(self, n):
        if n == 0:
            return Subspace.zero(self.coord_dim(0), self.field)
        return column_space(self.delta_matrix(n - 1))

    def cohomology(self, n):
        out = self._cohomology.get(n)
        if out is not None:
            return out
        ker = self.cocycles(n)
        im = self.coboundaries(n)
        from secohom.linalg import quotient_dim

        dim = quotient_dim(ker, im)
        reps = []
        span_rows = list(im.rows)
        span = im
        for row in ker.rows:
            residue = span.reduce(row)
            if not is_zero(residue):
                reps.append(self._monic(residue))
                span_rows.append(residue)
                span = Subspace.from_vectors(span_rows, ker.ambient, self.field)
        assert len(reps) == dim
        out = CohomologySpace(
            self, n, dim, [self.from_vector(n, r) for r in reps], ker, im
        )
        self._cohomology[n] = out
        return out

    def _monic(self, vec):
        lead = None
        for x in vec:
            if x != 0:
                lead = x
                break
        if lead is None or lead == 1:
            return tuple(vec)
        if self.field.char == 0:
            inv = Fraction(1, lead) if not isinstance(lead, Fraction) else 1 / lead
            return tuple(x * inv if x else 0 for x in vec)
        inv = self.field.one / self.field(lead)
        return tuple(x * inv if x != 0 else 0 for x in vec)

    def is_cocycle(self, f):
        return self.delta(f).is_zero()

    def coboundary_preimage(self, f):
        """Some g with delta(g) = f, or None.  Degree-0 cochains are never
        coboundaries (there is no C^{-1})."""
        n = f.degree
        if n == 0:
            return None
        x = solve(self.delta_matrix(n - 1), f.vector())
        if x is None:
            return None
        return self.from_vector(n - 1, x)

    # -- comparison map and chi ---------------------------------------------

    def phi(self, f):
        """Restriction along "all B-entries equal 1": an ordinary cochain."""
        if self.flavor != "secondary":
            raise PreconditionError("phi is defined on the secondary complex")
        n = f.degree
        lo = self.basis(n)
        unit_sparse = tuple(sparse_items(self.triple.B.unit))
        pair_entries = [unit_sparse] * lo.npairs
        ord_cx = self.ordinary
        table = []
        for off, diag, _ in ord_cx.basis(n):
            table.append(self.evaluate(f, list(diag), pair_entries))
        return Cochain(ord_cx, n, table, _freeze=False)

    def phi_induced(self, n):
        """Matrix of the induced map on degree-n cohomology, with kernel and
        image dimensions."""
        sec = self.cohomology(n)
        ordc = self.ordinary.cohomology(n)
        ord_reps = [r.vector() for r in ordc.representatives]
        k_ord = len(ord_reps)
        cols = []
        for rep in sec.representatives:
            g = self.phi(rep)
            assert self.ordinary.is_cocycle(g)
            cf = ordc.class_form(g)
            if k_ord == 0:
                if not is_zero(cf):
                    raise ValidationError("comparison map left the coboundary space")
                cols.append(())
                continue
            m = Matrix.from_rows(ord_reps, self.field).transpose()
            x = solve(m, list(cf))
            if x is None:
                raise ValidationError("comparison map image not spanned by representatives")
            cols.append(x)
        entries = {}
        for j, col in enumerate(cols):
            for i, v in enumerate(col):
                if v != 0:
                    entries[(i, j)] = v
        mat = Matrix(k_ord, sec.dim, self.field, entries)
        r = rank(mat)
        return PhiData(n, mat, sec.dim, k_ord, sec.dim - r, r)

    def chi(self, u):
        """The 2-cochain (a (x) b (x) alpha) -> a.u(alpha).b for a derivation
        u: B -> M (with the B-module structure through eps)."""
        if self.flavor != "secondary":
            raise PreconditionError("chi lands in the secondary complex")
        if not isinstance(u, LinearMap) or u.src_dim != self.triple.B.dim:
            raise ValidationError("chi expects a linear map B -> M")
        if not is_derivation(self.triple, self.module, u, on_b=True):
            raise ValidationError("not a derivation on B")
        mod = self.module
        table = []
        for off, diag, pairs in self.basis(2):
            mv = u.cols[pairs[0]]
            table.append(mod.act_right_basis(mod.act_left_basis(diag[0], mv), diag[1]))
        return Cochain(self, 2, table, _freeze=False)

    def __repr__(self):
        return (
            f"CochainComplex({self.flavor}, A dim {self.triple.A.dim}, "
            f"B dim {self.triple.B.dim}, M dim {self.module.dim})"
        )
