"""Exact coefficient arithmetic.

Two coefficient domains are supported:

* ``CycNum`` -- elements ``p + q*a`` of Q(a) with ``a = exp(i*pi/3)``, so that
  ``a**2 = a - 1``, ``a**3 = -1`` and ``a**6 = 1``.
* ``GenericCoeff`` -- Laurent polynomials in an indeterminate ``a`` with
  integer coefficients.  No relation is imposed on ``a``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational


class CoeffMode(str, enum.Enum):
    GENERIC = "generic-a"
    OMEGA6 = "omega6"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).lower().replace("_", "-")
        aliases = {"generic": cls.GENERIC, "generica": cls.GENERIC,
                   "generic-a": cls.GENERIC, "omega6": cls.OMEGA6,
                   "omega-6": cls.OMEGA6, "w6": cls.OMEGA6}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown coefficient mode {value!r}") from None


class ModeMismatch(ValueError):
    """Arithmetic between values living in different coefficient modes."""


def _rat(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _rat(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return _rat(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


class CycNum:
    """An element ``p + q*a`` of the sixth cyclotomic field."""

    __slots__ = ("p", "q")

    def __init__(self, p=0, q=0):
        self.p = _rat(p)
        self.q = _rat(q)

    @classmethod
    def a(cls):
        return cls(0, 1)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, CycNum):
            return x
        return cls(x, 0)

    @classmethod
    def a_power(cls, k):
        """Return ``a**k`` for any integer ``k``."""
        # a^0..a^5 = 1, a, a-1, -1, -a, 1-a
        table = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
        return cls(*table[k % 6])

    def is_zero(self):
        return self.p == 0 and self.q == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __add__(self, other):
        other = _cyc_or_none(other)
        if other is None:
            return NotImplemented
        return CycNum(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(-self.p, -self.q)

    def __sub__(self, other):
        other = _cyc_or_none(other)
        if other is None:
            return NotImplemented
        return CycNum(self.p - other.p, self.q - other.q)

    def __rsub__(self, other):
        other = _cyc_or_none(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _cyc_or_none(other)
        if other is None:
            return NotImplemented
        p1, q1, p2, q2 = self.p, self.q, other.p, other.q
        qq = q1 * q2
        # (p1 + q1 a)(p2 + q2 a) with a^2 = a - 1
        return CycNum(p1 * p2 - qq, p1 * q2 + q1 * p2 + qq)

    __rmul__ = __mul__

    def norm(self):
        """Field norm ``p^2 + p*q + q^2`` (product with the conjugate)."""
        return self.p * self.p + self.p * self.q + self.q * self.q

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("CycNum zero has no inverse")
        # conjugate of p + q a is p + q (1 - a)
        return CycNum(Fraction(self.p + self.q) / n, Fraction(-self.q) / n)

    def __truediv__(self, other):
        other = _cyc_or_none(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _cyc_or_none(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = CycNum(1)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"CycNum({self.p}, {self.q})"

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        qa = "a" if self.q == 1 else "-a" if self.q == -1 else f"{self.q}*a"
        if self.p == 0:
            return qa
        if qa.startswith("-"):
            return f"{self.p} - {qa[1:]}"
        return f"{self.p} + {qa}"

    def to_json(self):
        return {"p": str(self.p), "q": str(self.q)}

    @classmethod
    def from_json(cls, obj):
        return cls(Fraction(obj["p"]), Fraction(obj["q"]))


def _cyc_or_none(x):
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum(x)
    return None


def cyc_arith(op, u, v=None):
    """Dispatch ``add``/``sub``/``mul``/``neg`` on CycNum operands."""
    u = CycNum.coerce(u)
    if op == "neg":
        return -u
    v = CycNum.coerce(v)
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    raise ValueError(f"unknown operation {op!r}")


def cyc_inv(u):
    return CycNum.coerce(u).inverse()


class GenericCoeff:
    """Integer Laurent polynomial in the indeterminate ``a``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            c = _rat(c)
            if c:
                clean[int(e)] = c
        self.terms = clean

    @classmethod
    def a_power(cls, k, coeff=1):
        return cls({k: coeff})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GenericCoeff):
            return x
        if isinstance(x, (int, Fraction)):
            return cls({0: x})
        raise TypeError(f"cannot use {x!r} as a generic-a coefficient")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GenericCoeff({0: other})
        if not isinstance(other, GenericCoeff):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        other = GenericCoeff.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return GenericCoeff(out)

    __radd__ = __add__

    def __neg__(self):
        return GenericCoeff({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-GenericCoeff.coerce(other))

    def __rsub__(self, other):
        return GenericCoeff.coerce(other) - self

    def __mul__(self, other):
        other = GenericCoeff.coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return GenericCoeff(out)

    __rmul__ = __mul__

    def is_unit(self):
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def inverse(self):
        """Inverse of a unit ``±a^k``; anything else is not invertible here."""
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[a, 1/a]")
        (e, c), = self.terms.items()
        return GenericCoeff({-e: c})

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = GenericCoeff({0: 1})
        for _ in range(abs(k)):
            result = result * base
        return result

    def specialize(self):
        """Value at ``a = exp(i*pi/3)``."""
        total = CycNum(0)
        for e, c in self.terms.items():
            total = total + CycNum.a_power(e) * c
        return total

    def degree_range(self):
        if not self.terms:
            raise ValueError("zero has no degree")
        return min(self.terms), max(self.terms)

    def __repr__(self):
        return f"GenericCoeff({dict(sorted(self.terms.items()))})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            if e == 0:
                parts.append(str(c))
            else:
                mono = "a" if e == 1 else f"a^{e}"
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return {"a_terms": [[e, str(c)] for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): Fraction(c) for e, c in obj["a_terms"]})


def sigma(t):
    """``t - 1/t`` for an invertible ring element."""
    if isinstance(t, (int, Fraction)):
        t = CycNum(t)
    return t - t.inverse()


def coeff_one(mode):
    return CycNum(1) if CoeffMode.parse(mode) is CoeffMode.OMEGA6 else GenericCoeff({0: 1})


def coeff_from_json(obj):
    if "a_terms" in obj:
        return GenericCoeff.from_json(obj)
    return CycNum.from_json(obj)
