"""Sparse multivariate Laurent polynomials over the coefficient domains of
:mod:`squareice.cyclo`.

Internally a monomial is packed into a single Python int: field 0 holds the
exponent of ``a`` and field ``i + 1`` the exponent of ``vars[i]``, each field
biased by ``_BIAS``.  Multiplying monomials is then one integer addition.  In
generic mode the ``a`` field is an unrestricted exponent; in omega6 mode it is
0 or 1 (the basis ``{1, a}``) and products are reduced with ``a^2 = a - 1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce

from .cyclo import CoeffMode, CycNum, GenericCoeff, ModeMismatch

_BITS = 20
_BIAS = 1 << (_BITS - 1)
_MASK = (1 << _BITS) - 1

_VAR_RE = re.compile(r"^([a-z]+)(\d*)$")


class NonUnitSubstitution(ValueError):
    pass


class EmptyPolynomial(ValueError):
    pass


class UnboundVariable(KeyError):
    pass


def var_key(name):
    """Canonical ordering of variable names: x1 < x2 < ... < y1 < ... < aux."""
    m = _VAR_RE.match(name)
    if not m:
        raise ValueError(f"bad variable name {name!r}")
    letters, digits = m.groups()
    if digits and letters in ("x", "y"):
        return (0 if letters == "x" else 1, letters, int(digits))
    return (2, letters, int(digits) if digits else 0)


def var_kind(name):
    """``X``, ``Y`` or ``Aux`` for a variable name."""
    return ("X", "Y", "Aux")[var_key(name)[0]]


def xv(i):
    return f"x{i}"


def yv(j):
    return f"y{j}"


def _offset(nfields):
    off = 0
    for i in range(nfields):
        off |= _BIAS << (_BITS * i)
    return off


def _pack(exps):
    key = 0
    for i, e in enumerate(exps):
        key |= (e + _BIAS) << (_BITS * i)
    return key


def _unpack(key, nfields):
    return [((key >> (_BITS * i)) & _MASK) - _BIAS for i in range(nfields)]


def _field(key, i):
    return ((key >> (_BITS * i)) & _MASK) - _BIAS


def _norm_rat(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Immutable sparse Laurent polynomial in named variables."""

    __slots__ = ("mode", "vars", "_terms")

    def __init__(self, mode, vars=(), terms=None):
        self.mode = CoeffMode.parse(mode)
        self.vars = tuple(vars)
        self._terms = terms if terms is not None else {}

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, mode, vars=()):
        return cls(mode, vars, {})

    @classmethod
    def constant(cls, mode, c):
        mode = CoeffMode.parse(mode)
        return cls.monomial(mode, {}, c)

    @classmethod
    def one(cls, mode):
        return cls.constant(mode, 1)

    @classmethod
    def monomial(cls, mode, exps=None, coeff=1, a_exp=0):
        """``coeff * a**a_exp * prod(v**e for v, e in exps.items())``."""
        mode = CoeffMode.parse(mode)
        exps = {v: e for v, e in (exps or {}).items() if e}
        vars = tuple(sorted(exps, key=var_key))
        base = [e for e in (exps[v] for v in vars)]
        terms = {}
        for ae, c in _coeff_items(mode, coeff):
            ae += a_exp
            if mode is CoeffMode.OMEGA6:
                for ae2, c2 in _reduce_a_power(ae):
                    _acc(terms, _pack([ae2] + base), c * c2)
            else:
                _acc(terms, _pack([ae] + base), c)
        return cls(mode, vars, terms)

    @classmethod
    def variable(cls, mode, name):
        return cls.monomial(mode, {name: 1})

    # -- basic structure --------------------------------------------------

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        """Number of stored (monomial, coefficient) pairs."""
        return len(self.as_dict())

    @property
    def nfields(self):
        return len(self.vars) + 1

    def _require_same_mode(self, other):
        if self.mode is not other.mode:
            raise ModeMismatch(f"{self.mode.value} vs {other.mode.value}")

    def with_vars(self, vars):
        """Re-express over a superset ``vars`` of the current variables."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        missing = set(self.vars) - set(vars)
        if missing:
            raise ValueError(f"cannot drop variables {sorted(missing)}")
        pos = [0] + [vars.index(v) + 1 for v in self.vars]
        n_old, n_new = self.nfields, len(vars) + 1
        terms = {}
        for key, c in self._terms.items():
            old = _unpack(key, n_old)
            new = [0] * n_new
            for i, e in enumerate(old):
                new[pos[i]] = e
            terms[_pack(new)] = c
        return LaurentPoly(self.mode, vars, terms)

    def _aligned(self, other):
        self._require_same_mode(other)
        if self.vars == other.vars:
            return self, other
        vars = tuple(sorted(set(self.vars) | set(other.vars), key=var_key))
        return self.with_vars(vars), other.with_vars(vars)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction, CycNum, GenericCoeff)):
            return LaurentPoly.constant(self.mode, other)
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f, g = self._aligned(other)
        terms = dict(f._terms)
        for k, c in g._terms.items():
            _acc(terms, k, c)
        return LaurentPoly(f.mode, f.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.mode, self.vars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f, g = self._aligned(other)
        if len(f._terms) < len(g._terms):
            f, g = g, f
        off = _offset(f.nfields)
        terms = {}
        get = terms.get
        if f.mode is CoeffMode.GENERIC:
            for k2, c2 in g._terms.items():
                d = k2 - off
                for k1, c1 in f._terms.items():
                    k = k1 + d
                    terms[k] = get(k, 0) + c1 * c2
        else:
            for k2, c2 in g._terms.items():
                d = k2 - off
                a2 = k2 & _MASK
                for k1, c1 in f._terms.items():
                    k = k1 + d
                    c = c1 * c2
                    if (k1 & _MASK) + a2 - _BIAS == _BIAS + 2:
                        # a^2 = a - 1
                        terms[k - 1] = get(k - 1, 0) + c
                        terms[k - 2] = get(k - 2, 0) - c
                    else:
                        terms[k] = get(k, 0) + c
        return LaurentPoly(f.mode, f.vars, {k: _norm_rat(c) for k, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse_unit() ** (-k)
        result = LaurentPoly.one(self.mode)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scalar_mul(self, c):
        return self * LaurentPoly.constant(self.mode, c)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycNum, GenericCoeff)):
            other = LaurentPoly.constant(self.mode, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.mode is not other.mode:
            return False
        f, g = self._aligned(other)
        return f._terms == g._terms

    def __hash__(self):
        return hash((self.mode, frozenset(self.as_dict().items())))

    # -- views ------------------------------------------------------------

    def as_dict(self):
        """Canonical ``{((var, exp), ...): coeff}`` view, dropping unused vars."""
        n = self.nfields
        grouped = {}
        for key, c in self._terms.items():
            exps = _unpack(key, n)
            mono = tuple((v, e) for v, e in zip(self.vars, exps[1:]) if e)
            grouped.setdefault(mono, {})[exps[0]] = c
        out = {}
        for mono, acoeffs in grouped.items():
            out[mono] = self._make_coeff(acoeffs)
        return out

    def _make_coeff(self, acoeffs):
        if self.mode is CoeffMode.OMEGA6:
            return CycNum(acoeffs.get(0, 0), acoeffs.get(1, 0))
        return GenericCoeff(acoeffs)

    def used_vars(self):
        n = self.nfields
        used = set()
        for key in self._terms:
            exps = _unpack(key, n)
            used.update(v for v, e in zip(self.vars, exps[1:]) if e)
        return tuple(sorted(used, key=var_key))

    def trimmed(self):
        """Same polynomial over only the variables that actually occur."""
        used = self.used_vars()
        if used == self.vars:
            return self
        idx = [0] + [self.vars.index(v) + 1 for v in used]
        n = self.nfields
        terms = {}
        for key, c in self._terms.items():
            exps = _unpack(key, n)
            terms[_pack([exps[i] for i in idx])] = c
        return LaurentPoly(self.mode, used, terms)

    def terms(self):
        """``[(exps, coeff)]`` in canonical lexicographic order over ``vars``."""
        n = self.nfields
        grouped = {}
        for key, c in self._terms.items():
            exps = _unpack(key, n)
            grouped.setdefault(tuple(exps[1:]), {})[exps[0]] = c
        return [(exps, self._make_coeff(grouped[exps])) for exps in sorted(grouped)]

    def coefficient(self, exps):
        """Coefficient of a monomial given as ``{var: exp}``."""
        want = {v: e for v, e in exps.items() if e}
        mono = tuple((v, want[v]) for v in sorted(want, key=var_key))
        return self.as_dict().get(mono, self._make_coeff({}))

    def is_constant(self):
        return all(not any(_unpack(k, self.nfields)[1:]) for k in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.as_dict().get((), self._make_coeff({}))

    # -- unit handling ----------------------------------------------------

    def is_unit(self):
        if not self._terms:
            return False
        n = self.nfields
        monos = {tuple(_unpack(k, n)[1:]) for k in self._terms}
        if len(monos) != 1:
            return False
        (coeff,) = self.as_dict().values() or [self._make_coeff({})]
        if self.mode is CoeffMode.OMEGA6:
            return not coeff.is_zero()
        return coeff.is_unit()

    def inverse_unit(self):
        if not self.is_unit():
            raise ZeroDivisionError("polynomial is not a unit")
        (mono, coeff), = self.as_dict().items()
        return LaurentPoly.monomial(self.mode, {v: -e for v, e in mono}, coeff.inverse())

    def sigma(self):
        """``t - 1/t`` for a unit ``t``."""
        return self - self.inverse_unit()

    # -- substitution and renaming ----------------------------------------

    def rename(self, mapping):
        """Rename variables; targets may coincide with existing variables."""
        n = self.nfields
        new_vars = tuple(sorted({mapping.get(v, v) for v in self.vars}, key=var_key))
        pos = [0] + [new_vars.index(mapping.get(v, v)) + 1 for v in self.vars]
        terms = {}
        for key, c in self._terms.items():
            exps = _unpack(key, n)
            new = [0] * (len(new_vars) + 1)
            for i, e in enumerate(exps):
                new[pos[i]] += e
            _acc(terms, _pack(new), c)
        return LaurentPoly(self.mode, new_vars, terms)

    def swap(self, u, v):
        return self.rename({u: v, v: u})

    def substitute_monomial(self, v, replacement):
        """Replace every ``v**k`` by ``replacement**k``.

        ``replacement`` must be a unit: a single monomial with an invertible
        coefficient (``±a^k`` in generic mode, any nonzero CycNum in omega6).
        """
        if not isinstance(replacement, LaurentPoly):
            replacement = LaurentPoly.constant(self.mode, replacement)
        self._require_same_mode(replacement)
        if not replacement.is_unit():
            raise NonUnitSubstitution("replacement must be a single monomial with unit coefficient")
        if v not in self.vars:
            return self
        if v in replacement.used_vars():
            raise ValueError("replacement may not contain the substituted variable")
        idx = self.vars.index(v) + 1
        rest_vars = tuple(w for w in self.vars if w != v)
        keep = [i for i in range(self.nfields) if i != idx]
        n = self.nfields
        by_power = {}
        for key, c in self._terms.items():
            exps = _unpack(key, n)
            k = exps[idx]
            by_power.setdefault(k, {})[_pack([exps[i] for i in keep])] = c
        result = LaurentPoly.zero(self.mode)
        for k, terms in by_power.items():
            part = LaurentPoly(self.mode, rest_vars, terms)
            result = result + part * (replacement ** k)
        return result

    def specialize(self, assignment):
        """Substitute several variables by units (applied one at a time)."""
        out = self
        for v, r in assignment.items():
            out = out.substitute_monomial(v, r)
        return out

    def to_omega6(self):
        """Set the indeterminate ``a`` to ``exp(i*pi/3)``."""
        if self.mode is CoeffMode.OMEGA6:
            return self
        n = self.nfields
        terms = {}
        for key, c in self._terms.items():
            exps = _unpack(key, n)
            for ae, c2 in _reduce_a_power(exps[0]):
                exps[0] = ae
                _acc(terms, _pack(exps), c * c2)
        return LaurentPoly(CoeffMode.OMEGA6, self.vars, terms)

    # -- structural queries -----------------------------------------------

    def exponents_of(self, v):
        if v not in self.vars:
            return {0} if self._terms else set()
        idx = self.vars.index(v) + 1
        return {_field(k, idx) for k in self._terms}

    def degree_range(self, v):
        if not self._terms:
            raise EmptyPolynomial("degree of the zero polynomial is undefined")
        exps = self.exponents_of(v)
        return min(exps), max(exps)

    def parity_and_centered(self, v):
        lo, hi = self.degree_range(v)
        parities = {e % 2 for e in self.exponents_of(v)}
        if parities == {0}:
            parity = "even"
        elif parities == {1}:
            parity = "odd"
        else:
            parity = "mixed"
        return {"centered": lo == -hi, "parity": parity}

    def is_symmetric(self, u, v):
        return self.symmetry_witness(u, v) is None

    def symmetry_witness(self, u, v):
        """First monomial (canonical order) where ``f`` and ``f(u<->v)`` differ."""
        return first_difference(self, self.swap(u, v))

    def is_symmetric_set(self, vars):
        vars = list(vars)
        return all(self.is_symmetric(u, v) for u, v in zip(vars, vars[1:]))

    # -- evaluation -------------------------------------------------------

    def evaluate(self, point):
        """Exact value at ``point`` (``{var: CycNum}``; key ``"a"`` sets the
        value of the indeterminate in generic mode)."""
        n = self.nfields
        values = []
        for v in self.vars:
            if v not in point:
                raise UnboundVariable(v)
            values.append(CycNum.coerce(point[v]))
        if self.mode is CoeffMode.GENERIC:
            if "a" not in point:
                raise UnboundVariable("a")
            aval = CycNum.coerce(point["a"])
        else:
            aval = CycNum.a()
        cache = [dict() for _ in range(n)]

        def power(i, e):
            got = cache[i].get(e)
            if got is None:
                base = aval if i == 0 else values[i - 1]
                got = base ** e
                cache[i][e] = got
            return got

        total = CycNum(0)
        for key, c in self._terms.items():
            exps = _unpack(key, n)
            term = CycNum(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    # -- presentation -----------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self.mode.value}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exps) if e)
            cs = str(coeff)
            if not mono:
                parts.append(f"({cs})")
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    def to_json(self):
        f = self.trimmed()
        return {
            "mode": f.mode.value,
            "vars": list(f.vars),
            "terms": [{"exps": list(exps), "coeff": coeff.to_json()} for exps, coeff in f.terms()],
        }

    @classmethod
    def from_json(cls, obj):
        mode = CoeffMode.parse(obj["mode"])
        vars = list(obj["vars"])
        out = cls.zero(mode, tuple(sorted(vars, key=var_key)))
        for term in obj["terms"]:
            exps = dict(zip(vars, term["exps"]))
            c = term["coeff"]
            coeff = CycNum.from_json(c) if mode is CoeffMode.OMEGA6 else GenericCoeff.from_json(c)
            out = out + cls.monomial(mode, exps, coeff)
        return out


def _acc(terms, k, c):
    s = terms.get(k, 0) + c
    if s:
        terms[k] = _norm_rat(s)
    else:
        terms.pop(k, None)


def _reduce_a_power(e):
    """``a**e`` at omega6 as ``[(a_exp in {0, 1}, int coeff)]``."""
    z = CycNum.a_power(e)
    return [(ae, c) for ae, c in ((0, z.p), (1, z.q)) if c]


def _coeff_items(mode, coeff):
    """Split a coefficient into ``(a_exp, rational)`` pairs."""
    if isinstance(coeff, CycNum):
        if mode is not CoeffMode.OMEGA6:
            raise ModeMismatch("CycNum coefficient in generic-a mode")
        return [(ae, c) for ae, c in ((0, coeff.p), (1, coeff.q)) if c]
    if isinstance(coeff, GenericCoeff):
        if mode is not CoeffMode.GENERIC:
            raise ModeMismatch("generic-a coefficient in omega6 mode")
        return list(coeff.terms.items())
    if isinstance(coeff, (int, Fraction)):
        return [(0, _norm_rat(coeff))] if coeff else []
    raise TypeError(f"unsupported coefficient {coeff!r}")


def first_difference(f, g):
    """``None`` if ``f == g``, else ``(monomial, coeff_f, coeff_g)`` for the
    first differing monomial in canonical order."""
    df, dg = f.as_dict(), g.as_dict()
    if df == dg:
        return None
    zero = f._make_coeff({})
    keys = sorted(set(df) | set(dg), key=lambda m: tuple((var_key(v), e) for v, e in m))
    for mono in keys:
        cf, cg = df.get(mono, zero), dg.get(mono, zero)
        if cf != cg:
            return dict(mono), cf, cg
    return None


def poly_arith(op, f, g=None):
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scalar_mul":
        return f.scalar_mul(g)
    raise ValueError(f"unknown operation {op!r}")


def sigma_mono(mode, a_exp=0, exps=None, coeff=1):
    """``sigma(coeff * a**a_exp * monomial)`` as a polynomial."""
    return LaurentPoly.monomial(mode, exps or {}, coeff, a_exp).sigma()


def product(polys, mode):
    return reduce(lambda p, q: p * q, polys, LaurentPoly.one(mode))
