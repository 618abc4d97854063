"""Exact polynomial computations for the polynomial triples (A = k[X] with
B = k[f], and the two-variable analogue).

The cohomology of these triples is infinite-dimensional, so nothing here
pretends to run the finite engine on them.  Instead the module implements
the closed forms that the classes reduce to (the quotient by the derivative
ideal; the Jacobian image on a degree slice) plus exact bounded-degree
verifications: the sigma cocycle check, an explicit coboundary witness when
the remainder vanishes, a linear-system certificate of non-coboundarity when
it does not, and the first-order deformation comparison.
"""

import re

from secohom.errors import PreconditionError, SecohomError
from secohom.fields import QQ
from secohom.linalg import Matrix, Subspace, solve


class Poly1:
    """Univariate polynomial: dict exponent -> nonzero coefficient."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=None):
        self.field = field
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def const(cls, field, c):
        return cls(field, {0: field(c)})

    @classmethod
    def gen(cls, field):
        return cls(field, {1: field.one})

    @classmethod
    def monomial(cls, field, e, c=None):
        return cls(field, {e: c if c is not None else field.one})

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Poly1(self.field, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return Poly1(self.field, out)

    def __neg__(self):
        return Poly1(self.field, {e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Poly1(self.field, out)

    def scale(self, c):
        return Poly1(self.field, {e: c * v for e, v in self.coeffs.items()})

    def __pow__(self, n):
        out = Poly1.const(self.field, self.field.one)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self):
        return Poly1(self.field, {e - 1: e * c for e, c in self.coeffs.items() if e})

    def compose(self, other):
        out = Poly1(self.field, {})
        for e, c in self.coeffs.items():
            out = out + (other**e).scale(c)
        return out

    def divmod(self, other):
        """Univariate division; the divisor's leading coefficient must be
        invertible (always, over a field)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = Poly1(self.field, {})
        r = Poly1(self.field, dict(self.coeffs))
        d = other.degree()
        lead = other.coeffs[d]
        while not r.is_zero() and r.degree() >= d:
            e = r.degree()
            c = r.coeffs[e] / lead if self.field.char else _qdiv(r.coeffs[e], lead)
            t = Poly1.monomial(self.field, e - d, c)
            q = q + t
            r = r - t * other
        return q, r

    def __eq__(self, other):
        return isinstance(other, Poly1) and self.coeffs == other.coeffs

    def __repr__(self):
        return format_poly1(self)


def _qdiv(a, b):
    from fractions import Fraction

    return Fraction(a) / Fraction(b)


class Poly2:
    """Two-variable polynomial: dict (i, j) -> nonzero coefficient."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=None):
        self.field = field
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def const(cls, field, c):
        return cls(field, {(0, 0): field(c)})

    @classmethod
    def monomial(cls, field, i, j, c=None):
        return cls(field, {(i, j): c if c is not None else field.one})

    def is_zero(self):
        return not self.coeffs

    def total_degree(self):
        return max(i + j for i, j in self.coeffs) if self.coeffs else -1

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Poly2(self.field, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return Poly2(self.field, out)

    def __mul__(self, other):
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return Poly2(self.field, out)

    def partial(self, var):
        """var = 0 for X, 1 for Y."""
        out = {}
        for (i, j), c in self.coeffs.items():
            e = i if var == 0 else j
            if e:
                key = (i - 1, j) if var == 0 else (i, j - 1)
                out[key] = out.get(key, 0) + e * c
        return Poly2(self.field, out)

    def truncate(self, d):
        return Poly2(self.field, {e: c for e, c in self.coeffs.items() if e[0] + e[1] <= d})

    def __eq__(self, other):
        return isinstance(other, Poly2) and self.coeffs == other.coeffs

    def __repr__(self):
        return format_poly2(self)


# ----------------------------------------------------------------------
# sigma cocycles (one variable)


def sigma_eval(q, P, Q, alpha, f):
    """sigma_q(P (x) Q (x) alpha(f)) = q P Q alpha'(f); alpha is a Poly1 in
    the generator of B = k[f]."""
    return q * P * Q * alpha.derivative().compose(f)


def _delta2_terms(f, sigma, e, t):
    """The four terms of the degree-2 differential applied to sigma, on the
    monomial input with diagonal X^e1, X^e2, X^e3 and B-entries
    f^t12, f^t13, f^t23."""
    field = f.field
    e1, e2, e3 = e
    t12, t13, t23 = t
    X = lambda k: Poly1.monomial(field, k)
    y = lambda k: Poly1.monomial(field, k)  # powers of the B generator
    fp = lambda k: f**k

    term1 = X(e1) * fp(t12 + t13) * sigma(X(e2), X(e3), y(t23))
    term2 = sigma(fp(t12) * X(e1 + e2), X(e3), y(t13 + t23))
    term3 = sigma(X(e1), fp(t23) * X(e2 + e3), y(t12 + t13))
    term4 = sigma(X(e1), X(e2), y(t12)) * X(e3) * fp(t13 + t23)
    return term1 - term2 + term3 - term4


def _bounded_inputs(f, degree_bound):
    df = max(f.degree(), 1)
    for e1 in range(degree_bound + 1):
        for e2 in range(degree_bound + 1 - e1):
            for e3 in range(degree_bound + 1 - e1 - e2):
                rest = degree_bound - e1 - e2 - e3
                tmax = rest // df
                for t12 in range(tmax + 1):
                    for t13 in range(tmax + 1 - t12):
                        for t23 in range(tmax + 1 - t12 - t13):
                            yield (e1, e2, e3), (t12, t13, t23)


def verify_sigma_cocycle(f, q, degree_bound, sigma=None):
    """Exact check that the degree-2 differential kills sigma_q on every
    monomial input of relevant degree <= degree_bound (relevant degree:
    diagonal exponents plus deg(f) times the B-exponents)."""
    if degree_bound < f.degree():
        raise PreconditionError("degree bound below deg f")
    if sigma is None:
        sigma = lambda P, Q, alpha: sigma_eval(q, P, Q, alpha, f)
    for e, t in _bounded_inputs(f, degree_bound):
        if not _delta2_terms(f, sigma, e, t).is_zero():
            return False
    return True


def ker_phi2_dim_1var(f):
    """dim of k[X]/<f'>: the kernel of the degree-2 comparison map for the
    triple (k[X], k[f], f).  None means infinite (f' = 0)."""
    if f.degree() < 1:
        raise PreconditionError("f constant")
    fp = f.derivative()
    if fp.is_zero():
        return None
    return fp.degree()


def sigma_class_equal(f, q, p):
    """Whether sigma_q and sigma_p are cohomologous: q - p in <f'>."""
    fp = f.derivative()
    d = q - p
    if fp.is_zero():
        return d.is_zero()
    _, r = d.divmod(fp)
    return r.is_zero()


def coboundary_witness(f, d):
    """For d in <f'> return h with d = f' h; the derivation t(P) = P' h then
    satisfies delta(t) = -sigma_d.  None when d is not in the ideal."""
    fp = f.derivative()
    if fp.is_zero():
        return None
    h, r = d.divmod(fp)
    return None if not r.is_zero() else h


def verify_coboundary_witness(f, d, h, degree_bound):
    """Exact bounded check of sigma_d = -delta(t) for t(P) = P' h."""
    field = f.field

    def t(P):
        return P.derivative() * h

    df = max(f.degree(), 1)
    for a in range(degree_bound + 1):
        for b in range(degree_bound + 1 - a):
            for l in range((degree_bound - a - b) // df + 1):
                P = Poly1.monomial(field, a)
                Q = Poly1.monomial(field, b)
                eps_alpha = f**l
                # delta(t)(P (x) Q (x) alpha) = P eps(alpha) t(Q)
                #   - t(P Q eps(alpha)) + t(P) Q eps(alpha)
                lhs = P * eps_alpha * t(Q) - t(P * Q * eps_alpha) + t(P) * Q * eps_alpha
                alpha = Poly1.monomial(field, l)
                rhs = -sigma_eval(d, P, Q, alpha, f)
                if lhs != rhs:
                    return False
    return True


def coboundary_witness_exists(f, q, degree_bound):
    """Solvability of the bounded shadow of sigma_q = delta(w) over all
    k-linear w.

    The unknowns are the coefficients of w(X^c) for c <= degree_bound (the
    only values the bounded equations touch); value degrees are truncated,
    which can only add solutions.  A False return is therefore a certificate
    that sigma_q is not a coboundary; True is consistent with (but does not
    by itself prove) coboundarity.
    """
    field = f.field
    df = max(f.degree(), 1)
    C = degree_bound
    E = degree_bound + max(q.degree(), 0) + f.degree() + 1
    ncols = (C + 1) * (E + 1)

    def unknown(c, e):
        return c * (E + 1) + e

    entries = {}
    rhs = []
    row = 0
    for a in range(degree_bound + 1):
        for b in range(degree_bound + 1 - a):
            for l in range((degree_bound - a - b) // df + 1):
                fl = f**l
                left_mult = fl * Poly1.monomial(field, a)  # multiplies w(X^b)
                right_mult = fl * Poly1.monomial(field, b)  # multiplies w(X^a)
                middle = fl * Poly1.monomial(field, a + b)  # argument of -w(.)
                value = sigma_eval(q, Poly1.monomial(field, a), Poly1.monomial(field, b),
                                   Poly1.monomial(field, l), f)
                top = max(
                    [E + left_mult.degree(), E + right_mult.degree(), E, value.degree()]
                )
                for e0 in range(min(top, E + max(left_mult.degree(), right_mult.degree(), 0)) + 1):
                    r = row
                    for e in range(min(e0, E) + 1):
                        c1 = left_mult.coeffs.get(e0 - e, 0)
                        if c1 != 0:
                            key = (r, unknown(b, e))
                            entries[key] = entries.get(key, 0) + c1
                        c2 = right_mult.coeffs.get(e0 - e, 0)
                        if c2 != 0:
                            key = (r, unknown(a, e))
                            entries[key] = entries.get(key, 0) + c2
                    if e0 <= E:
                        for c, g in middle.coeffs.items():
                            key = (r, unknown(c, e0))
                            entries[key] = entries.get(key, 0) - g
                    rhs.append(value.coeffs.get(e0, 0))
                    row += 1
    entries = {k: v for k, v in entries.items() if v != 0}
    m = Matrix(row, ncols, field, entries)
    return solve(m, rhs) is not None


# ----------------------------------------------------------------------
# two variables


def sigma2_eval(a, b, P, Q, lam, f, g):
    """sigma_{a,b}(P (x) Q (x) Lambda(f, g)) =
    P Q (dLambda/df(f,g) a + dLambda/dg(f,g) b); Lambda is a Poly2 in the two
    generators of B = k[f, g]."""

    def subst(poly):
        out = Poly2.const(f.field, 0)
        for (i, j), c in poly.coeffs.items():
            term = Poly2.const(f.field, c)
            for _ in range(i):
                term = term * f
            for _ in range(j):
                term = term * g
            out = out + term
        return out

    return P * Q * (subst(lam.partial(0)) * a + subst(lam.partial(1)) * b)


def jacobian_cokernel_probe(f, g, d):
    """dim of the degree <= d slice of k[X,Y]^2 modulo the truncated image of
    the Jacobian of (f, g).  Monotone refinable in d; a finite probe of the
    cokernel, not the full infinite-dimensional quotient.

    Generators run over (v, w) of degree <= d minus the top degree actually
    present in the Jacobian entries (generically deg f - 1, but derivatives
    can collapse in characteristic p, and the probe must then see the full
    image), truncated back to the slice.
    """
    field = f.field
    maxdeg = max(f.total_degree(), g.total_degree(), 1)
    if d < maxdeg:
        raise PreconditionError("degree bound below deg(f), deg(g)")
    monos = [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]
    index = {e: k for k, e in enumerate(monos)}
    T = len(monos)

    fx, fy = f.partial(0), f.partial(1)
    gx, gy = g.partial(0), g.partial(1)

    jac_deg = max(
        [p.total_degree() for p in (fx, fy, gx, gy) if not p.is_zero()],
        default=0,
    )
    arg_deg = d - jac_deg
    vecs = []
    for (i, j) in monos:
        if i + j > arg_deg:
            continue
        mono = Poly2.monomial(field, i, j)
        for which in (0, 1):
            if which == 0:
                top, bot = fx * mono, gx * mono
            else:
                top, bot = fy * mono, gy * mono
            vec = [0] * (2 * T)
            for e, c in top.truncate(d).coeffs.items():
                vec[index[e]] = c
            for e, c in bot.truncate(d).coeffs.items():
                vec[T + index[e]] = c
            vecs.append(vec)
    image = Subspace.from_vectors(vecs, 2 * T, field)
    return 2 * T - image.dim


# ----------------------------------------------------------------------
# first-order deformations of eps


def deformed_epsilon_matches(f, p, q, degree_bound):
    """The t-linear term of the product family induced by f -> f + t p,
    compared against sigma_q on bounded monomial inputs."""
    field = f.field
    df = max(f.degree(), 1)
    for a in range(degree_bound + 1):
        for b in range(degree_bound + 1 - a):
            for l in range((degree_bound - a - b) // df + 1):
                # (f + t p)^l mod t^2 as a dual-number pair
                u0 = Poly1.const(field, field.one)
                u1 = Poly1(field, {})
                for _ in range(l):
                    u0, u1 = u0 * f, u0 * p + u1 * f
                lhs = u1 * Poly1.monomial(field, a + b)
                rhs = sigma_eval(
                    q,
                    Poly1.monomial(field, a),
                    Poly1.monomial(field, b),
                    Poly1.monomial(field, l),
                    f,
                )
                if lhs != rhs:
                    return False
    return True


def deformed_epsilon_check(f, p, degree_bound):
    """Whether the first-order term of the deformation eps_t(f) = f + t p is
    exactly sigma_p, on all bounded monomial inputs."""
    return deformed_epsilon_matches(f, p, p, degree_bound)


# ----------------------------------------------------------------------
# parsing / formatting

_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z]|\^|\*|\+|\-)")


def _tokenize(s):
    pos = 0
    out = []
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise SecohomError(f"cannot parse polynomial at ...{s[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_poly(s, field=QQ, variables=("X",)):
    """Parse "X^4", "3*X^2 - 2", "X*Y + Y^3", ...  Returns exponent-dict over
    the given variables."""
    var_index = {v.upper(): k for k, v in enumerate(variables)}
    tokens = _tokenize(s)
    nvars = len(variables)
    coeffs = {}
    i = 0

    def term(i):
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise SecohomError("dangling sign in polynomial")
        coef = field(sign)
        exps = [0] * nvars
        seen = False
        while i < len(tokens) and tokens[i] not in "+-":
            tok = tokens[i]
            if tok == "*":
                i += 1
                continue
            if tok[0].isdigit():
                coef = coef * field(tok)
                i += 1
                seen = True
                continue
            v = tok.upper()
            if v not in var_index:
                raise SecohomError(f"unknown variable {tok!r}")
            i += 1
            e = 1
            if i < len(tokens) and tokens[i] == "^":
                i += 1
                if i >= len(tokens) or not tokens[i].isdigit():
                    raise SecohomError("malformed exponent")
                e = int(tokens[i])
                i += 1
            exps[var_index[v]] += e
            seen = True
        if not seen:
            raise SecohomError("empty term in polynomial")
        return i, tuple(exps), coef

    while i < len(tokens):
        i, exps, coef = term(i)
        coeffs[exps] = coeffs.get(exps, 0) + coef
    return {e: c for e, c in coeffs.items() if c != 0}


def parse_poly1(s, field=QQ):
    d = parse_poly(s, field, ("X",))
    return Poly1(field, {e[0]: c for e, c in d.items()})


def parse_poly2(s, field=QQ):
    return Poly2(field, parse_poly(s, field, ("X", "Y")))


def format_poly1(p):
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p.coeffs[e]
        mono = "1" if e == 0 else ("X" if e == 1 else f"X^{e}")
        parts.append(f"{c}" if e == 0 else (mono if c == 1 else f"{c}*{mono}"))
    return " + ".join(parts)


def format_poly2(p):
    if p.is_zero():
        return "0"
    parts = []
    for (i, j) in sorted(p.coeffs, key=lambda e: (-(e[0] + e[1]), -e[0])):
        c = p.coeffs[(i, j)]
        mono = "*".join(
            [s for s in ("X" if i == 1 else f"X^{i}" if i else "",
                         "Y" if j == 1 else f"Y^{j}" if j else "") if s]
        ) or "1"
        parts.append(mono if (c == 1 and mono != "1") else (f"{c}" if mono == "1" else f"{c}*{mono}"))
    return " + ".join(parts)
