"""Symmetric-group action on cochains, shuffle operators, the interpolation
idempotents, and the Hodge-type decomposition.

Everything here needs A commutative and M symmetric, and (over a prime
field) the shuffle eigenvalues 2^i - 2 to stay distinct and the idempotent
denominators invertible; the guards are checked up front.

The shuffle operator is applied as a sum of 2^n - 2 table re-indexings (the
index permutation of each pure shuffle is cached on the complex), never as a
materialized operator matrix.
"""

import itertools
from fractions import Fraction

from secohom.complex import Cochain
from secohom.errors import PreconditionError
from secohom.linalg import Subspace
from secohom.vectors import vaddto


class Permutation:
    """Permutation of {0, ..., n-1} as an image tuple."""

    __slots__ = ("img", "n")

    def __init__(self, img):
        self.img = tuple(img)
        self.n = len(self.img)
        if sorted(self.img) != list(range(self.n)):
            raise ValueError("not a permutation")

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def all(cls, n):
        return [cls(img) for img in itertools.permutations(range(n))]

    def __call__(self, i):
        return self.img[i]

    def compose(self, other):
        """self after other: (self*other)(i) = self(other(i))."""
        return Permutation(tuple(self.img[other.img[i]] for i in range(self.n)))

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.img):
            inv[j] = i
        return Permutation(inv)

    @property
    def sign(self):
        img = self.img
        s = 1
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if img[i] > img[j]:
                    s = -s
        return s

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Permutation{self.img}"


def _check_action_preconditions(cx):
    if not cx.triple.A.is_commutative:
        raise PreconditionError("A not commutative")
    if not cx.module.is_symmetric:
        raise PreconditionError("M not symmetric")


def _index_permutation(cx, n, perm):
    """Offset map sigma with (perm . f).table[t] = f.table[sigma[t]]: the
    diagonal is re-read through perm and each B-entry through the sorted
    image pair."""
    key = ("actperm", n, perm.img)
    table = cx._cache.get(key)
    if table is not None:
        return table
    tb = cx.basis(n)
    img = perm.img
    pair_sources = []
    for (i, j) in tb.pairs:
        a, b = img[i], img[j]
        if a > b:
            a, b = b, a
        pair_sources.append(tb.pair_slot[(a, b)])
    table = []
    for off, diag, pairs in tb:
        ndiag = [diag[img[i]] for i in range(n)]
        npairs = [pairs[s] for s in pair_sources]
        table.append(tb.offset(ndiag, npairs))
    table = cx._cache[key] = tuple(table)
    return table


def act(perm, f):
    """Left action of a permutation on a degree-n cochain."""
    cx = f.complex
    _check_action_preconditions(cx)
    n = f.degree
    if perm.n != n:
        raise ValueError("permutation size does not match degree")
    sigma = _index_permutation(cx, n, perm)
    ftab = f.table
    return Cochain(cx, n, [ftab[s] for s in sigma], _freeze=False)


def act_right(perm, f):
    """Right action: the left action of the inverse."""
    return act(perm.inverse(), f)


def pure_shuffles(n, r):
    """Permutations increasing on the first r slots and on the rest."""
    out = []
    for chosen in itertools.combinations(range(n), r):
        rest = [i for i in range(n) if i not in chosen]
        out.append(Permutation(tuple(chosen) + tuple(rest)))
    return out


def _shuffle_tables(cx, n):
    # Each pure shuffle enters the operator through the right action (its
    # inverse left-acting); with the plain left action the operator fails to
    # commute with the differential from n = 3 on.  Signs are unaffected.
    key = ("shuffles", n)
    out = cx._cache.get(key)
    if out is None:
        out = []
        for r in range(1, n):
            for perm in pure_shuffles(n, r):
                out.append((perm.sign, _index_permutation(cx, n, perm.inverse())))
        out = cx._cache[key] = tuple(out)
    return out


def total_shuffle(f):
    """s_n f: the signed sum over all 2^n - 2 pure shuffles."""
    cx = f.complex
    _check_action_preconditions(cx)
    n = f.degree
    mdim = cx.module.dim
    tb = cx.basis(n)
    acc = [[0] * mdim for _ in range(tb.count)]
    ftab = f.table
    for sign, sigma in _shuffle_tables(cx, n):
        for t in range(tb.count):
            vaddto(acc[t], sign, ftab[sigma[t]])
    return Cochain(cx, n, acc)


def eigenvalues(n):
    """The shuffle eigenvalues 2^i - 2 for i = 1..n."""
    return [2**i - 2 for i in range(1, n + 1)]


def minimal_polynomial_apply(f):
    """mu_n(s_n) f where mu_n(x) = prod (x - lambda_i); zero for every f."""
    g = f
    for lam in eigenvalues(f.degree):
        g = total_shuffle(g) - g.scale(lam)
    return g


def _idempotent_scale(cx, n, k):
    """1 / prod_{i != k} (lambda_k - lambda_i), with the prime-field guards."""
    lams = eigenvalues(n)
    den = 1
    for i, lam in enumerate(lams, start=1):
        if i != k:
            den *= lams[k - 1] - lam
    if cx.field.char == 0:
        return Fraction(1, den)
    p = cx.field.char
    if p <= 2**n - 2:
        raise PreconditionError(
            f"prime field too small for degree {n} (need p > 2^n - 2)"
        )
    if den % p == 0:
        raise PreconditionError("denominator not invertible (prime field too small)")
    return cx.field.one / cx.field(den)


def idempotent_apply(k, f):
    """e_n(k) f, with e_n(k) the interpolation polynomial in the total
    shuffle projecting on the 2^k - 2 eigenspace.  e_n(k) = 0 for k > n or
    (k = 0, n > 0); e_0(0) is the identity."""
    cx = f.complex
    _check_action_preconditions(cx)
    n = f.degree
    if n == 0:
        return f if k == 0 else cx.zero(0)
    if k == 0 or k > n:
        return cx.zero(n)
    scale = _idempotent_scale(cx, n, k)
    g = f
    lams = eigenvalues(n)
    for i, lam in enumerate(lams, start=1):
        if i != k:
            g = total_shuffle(g) - g.scale(lam)
    return g.scale(scale)


def hodge_decomposition(cx, n):
    """Dimensions of the components of degree-n cohomology.

    Returns a list of dims for k = 1..n (for n = 0 the single entry is the
    k = 0 component, which is all of H^0).  Uses that the idempotents commute
    with the differential: the k-component is e(k) ker delta_n modulo
    e(k) im delta_{n-1}.
    """
    _check_action_preconditions(cx)
    if cx.field.char:
        _idempotent_scale(cx, max(n, 1), 1)
    if n == 0:
        return [cx.cohomology(0).dim]
    ker = cx.cocycles(n)
    im = cx.coboundaries(n)
    dims = []
    for k in range(1, n + 1):
        dk = _component_dim(cx, n, k, ker)
        dk -= _component_dim(cx, n, k, im)
        dims.append(dk)
    return dims


def _component_dim(cx, n, k, space):
    vecs = []
    for row in space.rows:
        f = cx.from_vector(n, row)
        vecs.append(idempotent_apply(k, f).vector())
    return Subspace.from_vectors(vecs, cx.coord_dim(n), cx.field).dim
