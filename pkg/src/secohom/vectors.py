"""Coordinate-vector helpers shared by the algebra and complex layers.

Vectors are tuples of field scalars.  Plain ``0`` is a valid additive
identity for every field (ints mix with Fraction and GFElement), which keeps
these loops free of field dispatch.
"""


def vzero(n):
    return (0,) * n


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    if c == 1:
        return tuple(u)
    return tuple(c * a for a in u)


def vaddto(acc, c, u):
    """acc += c*u in place; acc is a list."""
    if c == 1:
        for i, a in enumerate(u):
            if a:
                acc[i] += a
    else:
        for i, a in enumerate(u):
            if a:
                acc[i] += c * a


def is_zero(u):
    return all(x == 0 for x in u)


def basis_vector(n, i, one=1):
    v = [0] * n
    v[i] = one
    return tuple(v)


def sparse_items(u):
    return [(i, c) for i, c in enumerate(u) if c != 0]
