"""Vectorized sparse Laurent polynomials for the partition-function engines.

``ArrayPoly`` stores monomials as packed int64 keys over a fixed
:class:`Layout` (variable list and per-field bit widths chosen from exponent
bounds) with exact integer coefficient arrays.  Coefficients start as int64
and are promoted to Python-int object arrays before they could overflow.

Only what the engines need is implemented: addition, multiplication,
structural queries and conversion to and from :class:`LaurentPoly`.
"""

from __future__ import annotations

import numpy as np

from .cyclo import CoeffMode
from .laurent import EmptyPolynomial, LaurentPoly, _acc, _pack, var_key

_SAFE = 1 << 40


class LayoutOverflow(ValueError):
    pass


class Layout:
    """Field layout: field 0 is the ``a`` exponent (generic mode only)."""

    def __init__(self, mode, bounds, a_bound=0):
        self.mode = CoeffMode.parse(mode)
        self.vars = tuple(sorted(bounds, key=var_key))
        fields = []
        if self.mode is CoeffMode.GENERIC:
            fields.append(a_bound)
        fields.extend(bounds[v] for v in self.vars)
        self.widths = [max(2, int(b).bit_length() + 1) for b in fields]
        self.shifts = []
        total = 0
        for w in self.widths:
            self.shifts.append(total)
            total += w
        if total > 62:
            raise LayoutOverflow(f"{total} bits needed")
        self.biases = [1 << (w - 1) for w in self.widths]
        self.offset = sum(b << s for b, s in zip(self.biases, self.shifts))
        self.has_a = self.mode is CoeffMode.GENERIC

    def _signature(self):
        return (self.mode, self.vars, tuple(self.widths))

    def __eq__(self, other):
        return isinstance(other, Layout) and self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def pack(self, a_exp, exps):
        fields = ([a_exp] if self.has_a else []) + [exps.get(v, 0) for v in self.vars]
        key = 0
        for e, b, s, w in zip(fields, self.biases, self.shifts, self.widths):
            if not -b < e < b:
                raise LayoutOverflow(f"exponent {e} out of field range")
            key |= (e + b) << s
        return key

    def field_values(self, keys, idx):
        w, s, b = self.widths[idx], self.shifts[idx], self.biases[idx]
        return ((keys >> s) & ((1 << w) - 1)) - b

    def var_field(self, v):
        return self.vars.index(v) + (1 if self.has_a else 0)


def _combine(keys, coeffs):
    """Sum coefficients of equal keys and drop zeros."""
    if keys.size == 0:
        return keys, coeffs
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    coeffs = [c[order] for c in coeffs]
    starts = np.flatnonzero(np.concatenate(([True], keys[1:] != keys[:-1])))
    keys = keys[starts]
    coeffs = [np.add.reduceat(c, starts) for c in coeffs]
    nz = coeffs[0] != 0
    for c in coeffs[1:]:
        nz |= c != 0
    return keys[nz], [c[nz] for c in coeffs]


def _guard(arr):
    if arr.dtype == object or arr.size == 0:
        return arr
    if int(np.abs(arr).max()) > _SAFE:
        return arr.astype(object)
    return arr


class ArrayPoly:
    __slots__ = ("layout", "keys", "coeffs")

    def __init__(self, layout, keys, coeffs):
        self.layout = layout
        self.keys = keys
        self.coeffs = coeffs      # [c] in generic mode, [p, q] in omega6

    @classmethod
    def zero(cls, layout):
        n = 1 if layout.has_a else 2
        return cls(layout, np.zeros(0, np.int64), [np.zeros(0, np.int64) for _ in range(n)])

    @classmethod
    def from_laurent(cls, poly, layout):
        if poly.mode is not layout.mode:
            raise ValueError("mode mismatch")
        keys, cs = [], []
        for exps, coeff in poly.terms():
            ed = dict(zip(poly.vars, exps))
            unknown = [v for v, e in ed.items() if e and v not in layout.vars]
            if unknown:
                raise LayoutOverflow(f"variables {unknown} not in layout")
            if layout.has_a:
                for ae, c in coeff.terms.items():
                    keys.append(layout.pack(ae, ed))
                    cs.append((int(c),))
            else:
                if coeff.p.__class__ is not int or coeff.q.__class__ is not int:
                    raise LayoutOverflow("non-integer coefficient")
                keys.append(layout.pack(0, ed))
                cs.append((coeff.p, coeff.q))
        ncoef = 1 if layout.has_a else 2
        karr = np.array(keys, dtype=np.int64)
        carr = [np.array([c[i] for c in cs], dtype=np.int64) for i in range(ncoef)]
        k, c = _combine(karr, carr)
        return cls(layout, k, c)

    def __len__(self):
        return int(self.keys.size)

    def is_zero(self):
        return self.keys.size == 0

    def __add__(self, other):
        k = np.concatenate((self.keys, other.keys))
        cs = [_concat(a, b) for a, b in zip(self.coeffs, other.coeffs)]
        k, cs = _combine(k, cs)
        return ArrayPoly(self.layout, k, [_guard(c) for c in cs])

    def __neg__(self):
        return ArrayPoly(self.layout, self.keys, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        big, small = (self, other) if len(self) >= len(other) else (other, self)
        if small.is_zero():
            return ArrayPoly.zero(self.layout)
        off = self.layout.offset
        keys, parts = [], [[] for _ in big.coeffs]
        for t in range(len(small)):
            keys.append(big.keys + (int(small.keys[t]) - off))
            if self.layout.has_a:
                parts[0].append(big.coeffs[0] * int(small.coeffs[0][t]))
            else:
                p1, q1 = big.coeffs
                p2, q2 = int(small.coeffs[0][t]), int(small.coeffs[1][t])
                qq = q1 * q2
                # (p1 + q1 a)(p2 + q2 a), a^2 = a - 1
                parts[0].append(p1 * p2 - qq)
                parts[1].append(p1 * q2 + q1 * p2 + qq)
        k = np.concatenate(keys)
        cs = [_concat(*ps) for ps in parts]
        k, cs = _combine(k, cs)
        return ArrayPoly(self.layout, k, [_guard(c) for c in cs])

    def __eq__(self, other):
        if not isinstance(other, ArrayPoly):
            return NotImplemented
        if self.layout != other.layout:
            return self.to_laurent() == other.to_laurent()
        return (np.array_equal(self.keys, other.keys)
                and all(np.array_equal(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    __hash__ = None

    # -- structural queries, mirroring LaurentPoly -------------------------

    def exponents_of(self, v):
        if v not in self.layout.vars:
            return {0} if len(self) else set()
        vals = self.layout.field_values(self.keys, self.layout.var_field(v))
        return {int(e) for e in np.unique(vals)}

    def degree_range(self, v):
        if self.is_zero():
            raise EmptyPolynomial("degree of the zero polynomial is undefined")
        exps = self.exponents_of(v)
        return min(exps), max(exps)

    def parity_and_centered(self, v):
        lo, hi = self.degree_range(v)
        parities = {e % 2 for e in self.exponents_of(v)}
        parity = "even" if parities == {0} else "odd" if parities == {1} else "mixed"
        return {"centered": lo == -hi, "parity": parity}

    @property
    def vars(self):
        return self.layout.vars

    @property
    def mode(self):
        return self.layout.mode

    def to_laurent(self):
        lay = self.layout
        nvar = len(lay.vars)
        base = 1 if lay.has_a else 0
        cols = [lay.field_values(self.keys, i) for i in range(len(lay.widths))]
        terms = {}
        for t in range(len(self)):
            exps = [int(cols[base + i][t]) for i in range(nvar)]
            if lay.has_a:
                _acc(terms, _pack([int(cols[0][t])] + exps), int(self.coeffs[0][t]))
            else:
                p, q = int(self.coeffs[0][t]), int(self.coeffs[1][t])
                if p:
                    _acc(terms, _pack([0] + exps), p)
                if q:
                    _acc(terms, _pack([1] + exps), q)
        return LaurentPoly(lay.mode, lay.vars, terms)

    def evaluate(self, point):
        return self.to_laurent().evaluate(point)


def _concat(*arrs):
    if any(a.dtype == object for a in arrs):
        return np.concatenate([a.astype(object) for a in arrs])
    return np.concatenate(arrs)


def layout_for_graph(graph, mode):
    """Exponent bounds from vertex parameters: each vertex weight moves the
    exponent of each of its variables by at most ``|exp|`` and ``a`` by 2."""
    bounds = {}
    for v in graph.vertices:
        for var, e in v.param.items():
            bounds[var] = bounds.get(var, 0) + abs(e)
    return Layout(mode, bounds, a_bound=2 * len(graph.vertices))

