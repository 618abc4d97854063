"""Exact scalar fields: arbitrary-precision rationals and prime fields.

Rational scalars are plain ``int`` or ``fractions.Fraction`` (they mix freely
in arithmetic, and staying on ints keeps the hot paths cheap).  Prime-field
scalars are ``GFElement`` instances.  Everything downstream is duck-typed on
``+ - * / == bool``, so algebra code never needs to know which field it is
over.
"""

from fractions import Fraction
from functools import lru_cache


class Rationals:
    """The field of rational numbers (characteristic 0)."""

    char = 0
    name = "Q"

    zero = 0
    one = 1

    def __call__(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return int(x) if x.denominator == 1 else x
        if isinstance(x, str):
            return self(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into Q")

    @staticmethod
    def format(x):
        return str(Fraction(x))

    def __repr__(self):
        return "Q"


QQ = Rationals()


class GFElement:
    """Residue modulo a prime.  Mixes with ints (signs, small integer
    coefficients in formulas) but not with Fractions."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise TypeError("mixed prime fields")
            return other.v
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return GFElement(self.p, self.v + w)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return GFElement(self.p, self.v - w)

    def __rsub__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return GFElement(self.p, w - self.v)

    def __mul__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return GFElement(self.p, self.v * w)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        if w % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return GFElement(self.p, self.v * pow(w, self.p - 2, self.p))

    def __rtruediv__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return GFElement(self.p, w * pow(self.v, self.p - 2, self.p))

    def __neg__(self):
        return GFElement(self.p, -self.v)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        # Matches hash(int) when the residue is canonical, which keeps
        # int/GFElement mixing safe in dict keys.
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v}"


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError("prime too large for the elimination kernel")
        self.p = p
        self.char = p
        self.name = f"GF({p})"
        self.zero = GFElement(p, 0)
        self.one = GFElement(p, 1)

    def __call__(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise TypeError("mixed prime fields")
            return x
        if isinstance(x, int):
            return GFElement(self.p, x)
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            num = x.numerator % self.p
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator vanishes in GF({self.p})")
            return GFElement(self.p, num * pow(den, self.p - 2, self.p))
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    @staticmethod
    def format(x):
        return str(x.v)

    def __repr__(self):
        return self.name


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def field_from_name(name):
    """Parse a field descriptor as used in spec files: "Q" or "GF(p)"."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("GF(") and name.endswith(")"):
        return GF(int(name[3:-1]))
    raise ValueError(f"unknown field descriptor {name!r}")
