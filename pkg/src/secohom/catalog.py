"""Ready-made algebras and triples used by the test suite, the bundled spec
files, and `secohom selftest`."""

from secohom.algebra import Bimodule, FiniteAlgebra, Triple
from secohom.fields import QQ


def field_algebra(field=QQ):
    """The ground field as a 1-dimensional algebra."""
    return FiniteAlgebra(field, [[[field.one]]], [field.one], labels=["1"])


def truncated_polynomials(n, field=QQ, var="x"):
    """k[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    def mono(k):
        if k == 0:
            return "1"
        if k == 1:
            return var
        return f"{var}^{k}"

    mult = [
        [
            [field.one if (i + j) == k else 0 for k in range(n)]
            if i + j < n
            else [0] * n
            for j in range(n)
        ]
        for i in range(n)
    ]
    unit = [field.one] + [0] * (n - 1)
    return FiniteAlgebra(field, mult, unit, labels=[mono(k) for k in range(n)])


def dual_numbers(field=QQ):
    return truncated_polynomials(2, field)


def matrix_algebra_2x2(field=QQ):
    """2x2 matrices with basis E11, E12, E21, E22."""
    # E_{ab} E_{cd} = delta_{bc} E_{ad}
    idx = {(a, b): 2 * a + b for a in range(2) for b in range(2)}
    mult = []
    for a in range(2):
        for b in range(2):
            row = []
            for c in range(2):
                for d in range(2):
                    v = [0] * 4
                    if b == c:
                        v[idx[(a, d)]] = field.one
                    row.append(v)
            mult.append(row)
    unit = [0] * 4
    unit[idx[(0, 0)]] = field.one
    unit[idx[(1, 1)]] = field.one
    labels = ["E11", "E12", "E21", "E22"]
    return FiniteAlgebra(field, mult, unit, labels=labels)


def base_field_triple(A):
    """(A, k, unit inclusion); the secondary complex then reduces to the
    ordinary Hochschild complex."""
    B = field_algebra(A.field)
    return Triple(A, B, [A.unit])


def identity_triple(A):
    """(A, A, id) for commutative A."""
    cols = [A.basis(i) for i in range(A.dim)]
    return Triple(A, A, cols)


def power_map_triple(n, r, field=QQ):
    """(k[x]/(x^n), k[y]/(y^2), y -> x^r); needs 2r >= n so that eps is
    multiplicative."""
    A = truncated_polynomials(n, field)
    B = truncated_polynomials(2, field, var="y")
    img = [0] * n
    if r < n:
        img[r] = field.one
    return Triple(A, B, [A.unit, tuple(img)])


def regular(triple):
    return Bimodule.regular(triple)


def standard_triples(field=QQ):
    """The five workhorse triples: dual numbers over the base field, the
    identity triple on dual numbers, two power-map triples, and a
    noncommutative one."""
    return {
        "dual-base": base_field_triple(dual_numbers(field)),
        "dual-self": identity_triple(dual_numbers(field)),
        "quartic-square": power_map_triple(4, 2, field),
        "cubic-square": power_map_triple(3, 2, field),
        "mat2-base": base_field_triple(matrix_algebra_2x2(field)),
    }
