"""Vertex weights, partition functions and specialization prefactors."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cyclo import CoeffMode, CycNum
from .ice import ORIENTATIONS as _ORIENT
from .ice import IceGraph, NotDwbcGraph, state_sum
from .laurent import LaurentPoly, product
from .sparse import ArrayPoly, LayoutOverflow, layout_for_graph


class Convention(str, enum.Enum):
    """Which zero-entry orientation pair receives ``sigma(a*t)``.

    ``FIGURE``: arrows (west, north) and (east, south) get ``sigma(a*t)``,
    (east, north) and (west, south) get ``sigma(a/t)``.  ``MIRRORED`` is the
    transposed reading with the two pairs exchanged.  The calibration check in
    :mod:`squareice.verifier` selects ``FIGURE``; it is the default.
    """

    FIGURE = "figure"
    MIRRORED = "mirrored"


DEFAULT_CONVENTION = Convention.FIGURE

_CLASS = {"O1": "c", "O2": "c", "O3": "b", "O4": "b", "O5": "bb", "O6": "bb"}


def sigma_a(mode, a_exp, exps=None):
    """``sigma(a**a_exp * monomial)``."""
    return LaurentPoly.monomial(mode, exps or {}, 1, a_exp).sigma()


def weight_poly(code, param, mode, convention=DEFAULT_CONVENTION):
    """Weight of orientation ``code`` at a vertex with parameter ``param``."""
    mode = CoeffMode.parse(mode)
    cls = _CLASS[code]
    if cls == "c":
        return sigma_a(mode, 2)
    inverted = (cls == "bb") != (Convention(convention) is Convention.MIRRORED)
    exps = {v: -e if inverted else e for v, e in param.items()}
    return sigma_a(mode, 1, exps)


class WeightTable:
    """Cached weights for one graph: ``table(vid, code) -> value``."""

    def __init__(self, graph, mode, convention=DEFAULT_CONVENTION, point=None, layout=None):
        self.graph = graph
        self.mode = CoeffMode.parse(mode)
        self.convention = Convention(convention)
        self.point = point
        self.layout = layout
        self._cache = {}

    def __call__(self, vid, code):
        param = self.graph.vertices[vid].param
        key = (tuple(sorted(param.items())), _CLASS[code])
        got = self._cache.get(key)
        if got is None:
            got = weight_poly(code, param, self.mode, self.convention)
            if self.point is not None:
                got = got.evaluate(self.point)
            elif self.layout is not None:
                got = ArrayPoly.from_laurent(got, self.layout)
            self._cache[key] = got
        return got


@dataclass
class PartitionResult:
    value: object                 # LaurentPoly, or CycNum for evaluated results
    state_count: int
    split: dict | None = None     # split-edge label -> value

    def to_json(self, model, n, mode):
        out = {"model": model, "n": n, "mode": CoeffMode.parse(mode).value,
               "Z": self.value.to_json(), "state_count": self.state_count}
        if self.split is not None:
            (l1, v1), (l2, v2) = self.split.items()
            out["split"] = {"or1": v1.to_json(), "or2": v2.to_json(), "labels": [l1, l2]}
        return out


def _zero_one(mode, point, layout=None):
    if point is not None:
        return CycNum(0), CycNum(1)
    if layout is not None:
        one = ArrayPoly.from_laurent(LaurentPoly.one(mode), layout)
        return ArrayPoly.zero(layout), one
    return LaurentPoly.zero(mode), LaurentPoly.one(mode)


def _setup(graph, mode, convention, point, backend):
    """Weight table plus zero/one for the chosen arithmetic backend.

    ``backend`` is ``"dict"`` (LaurentPoly throughout), ``"array"`` (the
    vectorized :class:`ArrayPoly`) or ``"auto"`` (array when the exponent
    layout fits in a machine word).
    """
    layout = None
    if point is None and backend != "dict":
        try:
            layout = layout_for_graph(graph, mode)
        except LayoutOverflow:
            if backend == "array":
                raise
    weights = WeightTable(graph, mode, convention, point, layout)
    return (weights,) + _zero_one(mode, point, layout)


def _finish(value, raw):
    if isinstance(value, ArrayPoly) and not raw:
        return value.to_laurent()
    return value


def partition_function(graph: IceGraph, mode=CoeffMode.GENERIC, convention=DEFAULT_CONVENTION,
                       point=None, backend="auto", raw=False):
    """Exact partition function by enumerating ice states.

    With ``point`` (``{var: CycNum}``), weights are evaluated there and the
    value is a CycNum; otherwise it is a LaurentPoly (or the backend's raw
    ArrayPoly when ``raw`` is set).  If the graph has a split edge, ``split``
    holds the two restricted sums keyed by its labels.
    """
    mode = CoeffMode.parse(mode)
    if point is not None and mode is CoeffMode.GENERIC:
        raise ValueError("point evaluation requires omega6 mode")
    weights, zero, one = _setup(graph, mode, convention, point, backend)
    if graph.split_edge is None:
        value, count = state_sum(graph, weights, one, zero)
        return PartitionResult(_finish(value, raw), count)
    split = {}
    total_count = 0
    value = zero
    for label, fwd in zip(graph.split_labels, (True, False)):
        if graph.split_edge in graph.constraints and graph.constraints[graph.split_edge] != fwd:
            part, count = zero, 0
        else:
            part, count = state_sum(graph.with_constraints({graph.split_edge: fwd}), weights, one, zero)
        split[label] = part
        value = value + part
        total_count += count
    split = {k: _finish(v, raw) for k, v in split.items()}
    return PartitionResult(_finish(value, raw), total_count, split)


def transfer_matrix_partition(graph: IceGraph, mode=CoeffMode.GENERIC, convention=DEFAULT_CONVENTION,
                              point=None, backend="auto", raw=False):
    """Domain-wall partition function by a row-by-row sweep.

    The sweep state is the tuple of vertical arrows (``True`` = north) below
    the current position plus the horizontal arrow entering the next vertex;
    accumulators are merged per state, so memory is O(2^n) values.
    """
    if graph.model != "dwbc":
        raise NotDwbcGraph(graph.model)
    mode = CoeffMode.parse(mode)
    n = graph.n
    weights, zero, one = _setup(graph, mode, convention, point, backend)
    vid = {v.pos: v.id for v in graph.vertices}
    # bottom boundary arrows point south
    layer = {(False,) * n: one}
    for i in range(1, n + 1):
        # left boundary arrow points east
        row = {(cols, True): val for cols, val in layer.items()}
        for j in range(1, n + 1):
            nxt = {}
            for (cols, h_in_east), val in row.items():
                v_below_north = cols[j - 1]
                for h_out_east in (True, False):
                    for v_above_north in (True, False):
                        # slot in-flags W, E, N, S
                        flags = (h_in_east, not h_out_east, not v_above_north, v_below_north)
                        code = _ORIENT.get(flags)
                        if code is None:
                            continue
                        w = weights(vid[i, j], code)
                        key = (cols[: j - 1] + (v_above_north,) + cols[j:], h_out_east)
                        prev = nxt.get(key)
                        term = val * w
                        nxt[key] = term if prev is None else prev + term
            row = nxt
        # right boundary arrow points west
        layer = {}
        for (cols, h_east), val in row.items():
            if not h_east:
                prev = layer.get(cols)
                layer[cols] = val if prev is None else prev + val
    # top boundary arrows point north
    return _finish(layer.get((True,) * n, zero), raw)


def _s(mode, a_exp, num=None, den=None):
    exps = {}
    if num is not None:
        exps[num] = exps.get(num, 0) + 1
    if den is not None:
        exps[den] = exps.get(den, 0) - 1
    return sigma_a(mode, a_exp, exps)


def spec_factor_A(y1, xs, ys, mode=CoeffMode.GENERIC):
    """Prefactor when the first row parameter is set to ``a * y1``.

    ``prod_{k>=2} sigma(a x_k / y1) * prod_{k>=1} sigma(a^2 y1 / y_k)`` with
    ``xs = (x_1, ..., x_N)`` and ``ys = (y_1 = y1, ..., y_N)``.
    """
    _check_factor_args(y1, xs, ys)
    return product([_s(mode, 1, xk, y1) for xk in xs[1:]]
                   + [_s(mode, 2, y1, yk) for yk in ys], mode)


def spec_factor_Abar(y1, xs, ys, mode=CoeffMode.GENERIC):
    """Prefactor when the first row parameter is set to ``y1 / a``."""
    _check_factor_args(y1, xs, ys)
    return product([_s(mode, 1, y1, xk) for xk in xs[1:]]
                   + [_s(mode, 2, yk, y1) for yk in ys], mode)


def _check_factor_args(y1, xs, ys):
    if not xs or not ys or ys[0] != y1 or len(xs) != len(ys):
        raise IndexError("expected xs = (x1..xN), ys = (y1..yN) with ys[0] == y1")


def spec_factor_ht(kind, xs, ys, mode=CoeffMode.GENERIC):
    """Half-turn specialization prefactors.

    ``A_H1`` / ``Abar_H1``: ``xs = (x_1..x_N)``, ``ys = (y_1..y_N)``;
    ``A_H0`` / ``Abar_H0``: ``xs = (x_1..x_{N-1})``, ``ys = (y_1..y_N)``.
    """
    xs, ys = tuple(xs), tuple(ys)
    if kind in ("A_H1", "Abar_H1"):
        if not xs or len(xs) != len(ys):
            raise IndexError("A_H1 needs N >= 1 row and N column variables")
        x1 = xs[0]
        if kind == "A_H1":
            parts = [_s(mode, 2, x1, xk) for xk in xs] + [_s(mode, 1, yk, x1) for yk in ys]
        else:
            parts = [_s(mode, 2, xk, x1) for xk in xs] + [_s(mode, 1, x1, yk) for yk in ys]
    elif kind in ("A_H0", "Abar_H0"):
        if not ys or len(xs) != len(ys) - 1:
            raise IndexError("A_H0 needs N-1 row and N >= 1 column variables")
        y1 = ys[0]
        if kind == "A_H0":
            parts = [_s(mode, 1, xk, y1) for xk in xs] + [_s(mode, 2, y1, yk) for yk in ys]
        else:
            parts = [_s(mode, 1, y1, xk) for xk in xs] + [_s(mode, 2, yk, y1) for yk in ys]
    else:
        raise ValueError(f"unknown prefactor kind {kind!r}")
    return product(parts, mode)


def standalone_prefactor(kind, x, y1, mode=CoeffMode.GENERIC):
    """The extra single factors of the even-order specializations:
    ``pair_ax``: ``sigma(a x / y1)``; ``pair_bax``: ``sigma(a y1 / y)``."""
    if kind == "pair_ax":
        return _s(mode, 1, x, y1)
    if kind == "pair_bax":
        return _s(mode, 1, y1, x)
    raise ValueError(kind)
