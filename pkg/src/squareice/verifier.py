"""Executable checks of the square-ice identities.

Each ``check_*`` function returns a :class:`CheckReport`.  Symbolic checks
compare exact Laurent polynomials and report the first differing monomial on
failure; randomized checks evaluate at seeded exact points of Q(a) and
report the failing point.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .cyclo import CoeffMode, CycNum, sigma
from .ice import (asm_count_oracle, build_dwbc, build_ht_even, build_ht_odd,
                  enumerate_states, enumerate_with_codes, htasm_count_oracle)
from .laurent import LaurentPoly, first_difference
from .partition import (DEFAULT_CONVENTION, Convention, partition_function,
                        sigma_a, spec_factor_A, spec_factor_Abar, spec_factor_ht,
                        standalone_prefactor, transfer_matrix_partition, weight_poly)
from .tangles import (YB_STUBS, assignments, column_stubs, loop_tangle, row_pair,
                      tangle_graph, yang_baxter_left, yang_baxter_right)

G = CoeffMode.GENERIC
W6 = CoeffMode.OMEGA6

# Which split orientation of the odd model goes with which of the even model
# in each specialization identity.  Pinned by the calibration check.
HT_PAIRINGS = {
    "impair_ax": (("se", "down"), ("nw", "up")),
    "impair_bax": (("se", "up"), ("nw", "down")),
    "pair_ax": (("up", "se"), ("down", "nw")),
    "pair_bax": (("up", "nw"), ("down", "se")),
}


@dataclass
class CheckReport:
    check_name: str
    params: dict
    verdict: str
    witness: object = None
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.verdict == "pass"

    def to_json(self, timing=True):
        out = {"check": self.check_name, "params": self.params,
               "verdict": self.verdict, "witness": self.witness}
        if self.details:
            out["details"] = self.details
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    def summary(self):
        tail = "" if self.passed else f"  witness={self.witness}"
        return f"{self.check_name} {self.params}: {self.verdict.upper()}{tail}"


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _report(name, params, witness, timer, details=None):
    verdict = "pass" if witness is None else "fail"
    return CheckReport(name, params, verdict, witness, timer.elapsed, details or {})


# ---------------------------------------------------------------------------
# witnesses and comparison helpers


def _coeff_json(c):
    return c.to_json() if hasattr(c, "to_json") else str(c)


def poly_witness(f, g, **context):
    """``None`` if ``f == g``, else the first differing monomial."""
    diff = first_difference(f, g)
    if diff is None:
        return None
    mono, cf, cg = diff
    return {**context, "monomial": {v: e for v, e in sorted(mono.items())},
            "lhs": _coeff_json(cf), "rhs": _coeff_json(cg)}


def point_json(point):
    return {v: c.to_json() for v, c in sorted(point.items())}


class PointSampler:
    """Seeded exact points ``p + q*a`` with small integer ``p, q``.

    Zero values are rejected (and counted), as are points failing an optional
    ``accept(point)`` test, e.g. a cleared denominator vanishing there.
    """

    def __init__(self, seed, radius=4):
        self.rng = random.Random(seed)
        self.radius = radius
        self.rejections = 0

    def value(self):
        while True:
            p = self.rng.randint(-self.radius, self.radius)
            q = self.rng.randint(-self.radius, self.radius)
            if p or q:
                return CycNum(p, q)
            self.rejections += 1

    def points(self, variables, count, width=0, accept=None, limit=10000):
        """At least ``count`` points; more are drawn until every variable
        takes more than ``width`` distinct values."""
        pts = []
        seen = {v: set() for v in variables}
        while len(pts) < count or any(len(s) <= width for s in seen.values()):
            if len(pts) >= limit:
                raise RuntimeError("could not draw enough distinct points")
            pt = {v: self.value() for v in variables}
            if accept is not None and not accept(pt):
                self.rejections += 1
                continue
            pts.append(pt)
            for v in variables:
                seen[v].add((pt[v].p, pt[v].q))
        assert all(len(s) > width for s in seen.values())
        return pts


def _swapped(point, u, v):
    out = dict(point)
    out[u], out[v] = point[v], point[u]
    return out


def _adjacent(names):
    return [(u, v) for u, v in zip(names, names[1:])]


def _xs(n, start=1):
    return [f"x{i}" for i in range(start, n + 1)]


def _ys(n, start=1):
    return [f"y{i}" for i in range(start, n + 1)]


def _unit(mode, exps, a_exp):
    return LaurentPoly.monomial(mode, exps, 1, a_exp)


# ---------------------------------------------------------------------------
# coefficient identities


def check_spec_identities(mode=W6, samples=10, seed=0):
    """sigma(a) = sigma(a^2), and sigma(a^2 x) = -sigma(x/a) = sigma(a/x)."""
    mode = CoeffMode.parse(mode)
    params = {"mode": mode.value, "samples": samples, "seed": seed}
    with _Timer() as t:
        x = {"x": 1}
        witness = (poly_witness(sigma_a(mode, 1), sigma_a(mode, 2), identity="sigma(a)=sigma(a^2)")
                   or poly_witness(sigma_a(mode, 2, x), -sigma_a(mode, -1, x),
                                   identity="sigma(a^2 x)=-sigma(x/a)")
                   or poly_witness(-sigma_a(mode, -1, x), sigma_a(mode, 1, {"x": -1}),
                                   identity="-sigma(x/a)=sigma(a/x)"))
        if witness is None and mode is W6:
            sampler = PointSampler(seed)
            ainv = CycNum.a().inverse()
            a2 = CycNum.a() * CycNum.a()
            for _ in range(samples):
                xv = sampler.value()
                if sigma(a2 * xv) + sigma(ainv * xv) != 0:
                    witness = {"point": {"x": xv.to_json()}}
                    break
    return _report("spec-identities", params, witness, t)


# ---------------------------------------------------------------------------
# local identities on tangles


def _tangle_value(vertices, fixed, mode=G, convention=DEFAULT_CONVENTION):
    return partition_function(tangle_graph(vertices, fixed), mode, convention,
                              backend="dict").value


def check_yang_baxter(mode=G, strategy="symbolic", trials=20, seed=0, constrained=True,
                      convention=DEFAULT_CONVENTION):
    """Both three-crossing tangles agree for all 64 external orientations.

    ``symbolic``: generic-a polynomials with ``z := 1/(a x y)``.
    ``random``: omega6 evaluation at seeded points with that ``z``.
    ``constrained=False`` keeps ``z`` independent (the identity then fails).
    """
    mode = CoeffMode.parse(mode)
    params = {"mode": mode.value, "strategy": strategy, "constrained": constrained,
              "convention": Convention(convention).value}
    details = {}
    witness = None
    with _Timer() as t:
        conv = Convention(convention)
        if strategy == "symbolic":
            unit = _unit(mode, {"x": -1, "y": -1}, -1)
            for fixed in assignments(YB_STUBS):
                lhs = _tangle_value(yang_baxter_left(), fixed, mode, conv)
                rhs = _tangle_value(yang_baxter_right(), fixed, mode, conv)
                if constrained:
                    lhs, rhs = lhs.substitute_monomial("z", unit), rhs.substitute_monomial("z", unit)
                witness = poly_witness(lhs, rhs, external=fixed)
                if witness:
                    break
        elif strategy == "random":
            params.update(trials=trials, seed=seed, mode=W6.value)
            sampler = PointSampler(seed)
            pts = sampler.points(["x", "y", "z"], trials, width=2)
            ainv = CycNum.a().inverse()
            graphs = [(fixed, tangle_graph(yang_baxter_left(), fixed),
                       tangle_graph(yang_baxter_right(), fixed))
                      for fixed in assignments(YB_STUBS)]
            for pt in pts:
                if constrained:
                    pt = {**pt, "z": ainv / (pt["x"] * pt["y"])}
                for fixed, gl, gr in graphs:
                    lv = partition_function(gl, W6, conv, point=pt).value
                    rv = partition_function(gr, W6, conv, point=pt).value
                    if lv != rv:
                        witness = {"external": fixed, "point": point_json(pt),
                                   "lhs": lv.to_json(), "rhs": rv.to_json()}
                        break
                if witness:
                    break
            details = {"points": len(pts), "rejections": sampler.rejections}
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
    return _report("yang-baxter", params, witness, t, details)


def check_loop_identity(factor="full"):
    """Crossing closed by a U-turn arc equals
    ``(sigma(a z) + sigma(a^2))`` times (one in, one out), and 0 otherwise."""
    params = {"mode": G.value, "factor": factor}
    with _Timer() as t:
        if factor == "full":
            k = sigma_a(G, 1, {"z": 1}) + sigma_a(G, 2)
        elif factor == "sigma_az":
            k = sigma_a(G, 1, {"z": 1})
        else:
            raise ValueError(factor)
        witness = None
        for fixed in assignments(["top", "bottom"]):
            lhs = _tangle_value(loop_tangle(), fixed)
            through = fixed["top"] != fixed["bottom"]
            rhs = k if through else LaurentPoly.zero(G)
            witness = poly_witness(lhs, rhs, external=fixed)
            if witness:
                break
    return _report("loop-identity", params, witness, t)


def check_exchange_loop(width, swap_coeffs=False):
    """Exchanging the parameters of two rows closed by an arc (and of two
    open rows with opposite right-hand arrows), denominators cleared."""
    params = {"mode": G.value, "width": width, "swap_coeffs": swap_coeffs}
    s2 = sigma_a(G, 2)
    sxy = sigma_a(G, 0, {"x": 1, "y": -1})
    den = sigma_a(G, 2, {"y": 1, "x": -1})
    ca, cb = (s2, sxy) if swap_coeffs else (sxy, s2)
    t_out = {"out_t": "out", "out_b": "in"}
    b_out = {"out_t": "in", "out_b": "out"}
    witness = None
    with _Timer() as t:
        for cols in assignments(column_stubs(width)):
            base = {"in_b": "in", "in_t": "in", **cols}
            arc_xy = _tangle_value(row_pair(width, "x", "y"), base)
            arc_yx = _tangle_value(row_pair(width, "y", "x"), base)
            open_xy = {k: _tangle_value(row_pair(width, "x", "y", right="open"), {**base, **f})
                       for k, f in (("T", t_out), ("B", b_out))}
            open_yx = {k: _tangle_value(row_pair(width, "y", "x", right="open"), {**base, **f})
                       for k, f in (("T", t_out), ("B", b_out))}
            checks = [
                ("arc", den * arc_xy, (s2 + sxy) * arc_yx),
                ("top-out", den * open_xy["T"], ca * open_yx["B"] + cb * open_yx["T"]),
                ("bottom-out", den * open_xy["B"], ca * open_yx["T"] + cb * open_yx["B"]),
            ]
            for name, lhs, rhs in checks:
                witness = poly_witness(lhs, rhs, identity=name, external=cols)
                if witness:
                    break
            if witness:
                break
    return _report("exchange-loop", params, witness, t)


# ---------------------------------------------------------------------------
# domain-wall partition function


def dwbc_z(n, mode=G, convention=DEFAULT_CONVENTION, raw=False):
    return transfer_matrix_partition(build_dwbc(n), mode, convention, raw=raw)


def check_half_width(n, mode=G):
    """Centered, half-width ``n-1``, parity ``n-1`` in every variable."""
    mode = CoeffMode.parse(mode)
    params = {"n": n, "mode": mode.value}
    witness = None
    with _Timer() as t:
        z = dwbc_z(n, mode, raw=True)
        want_parity = "even" if (n - 1) % 2 == 0 else "odd"
        for v in _xs(n) + _ys(n):
            lo, hi = z.degree_range(v)
            info = z.parity_and_centered(v)
            if (lo, hi) != (1 - n, n - 1) or info["parity"] != want_parity:
                witness = {"variable": v, "range": [lo, hi], "parity": info["parity"]}
                break
    return _report("half-width", params, witness, t, {"terms": len(z)})


def check_partial_symmetry(n, mode=G, transpositions=None):
    """Invariance under adjacent swaps within the x's and within the y's."""
    mode = CoeffMode.parse(mode)
    swaps = transpositions or _adjacent(_xs(n)) + _adjacent(_ys(n))
    params = {"n": n, "mode": mode.value, "transpositions": [list(s) for s in swaps]}
    witness = None
    with _Timer() as t:
        z = dwbc_z(n, mode)
        for u, v in swaps:
            witness = poly_witness(z, z.swap(u, v), transposition=[u, v])
            if witness:
                break
    return _report("partial-symmetry", params, witness, t)


def check_specialization_dwbc(n, convention=DEFAULT_CONVENTION, swap_factors=False):
    """``Z(x1 = y1/a) = Abar * Z(n-1)`` and ``Z(x1 = a y1) = A * Z(n-1)``."""
    conv = Convention(convention)
    params = {"n": n, "mode": G.value, "convention": conv.value, "swap_factors": swap_factors}
    xs, ys = _xs(n), _ys(n)
    with _Timer() as t:
        z = dwbc_z(n, G, conv)
        smaller = transfer_matrix_partition(build_dwbc(n - 1, xs[1:], ys[1:]), G, conv)
        fa, fb = spec_factor_A("y1", xs, ys), spec_factor_Abar("y1", xs, ys)
        if swap_factors:
            fa, fb = fb, fa
        witness = (poly_witness(z.substitute_monomial("x1", _unit(G, {"y1": 1}, -1)), fb * smaller,
                                identity="x1=y1/a")
                   or poly_witness(z.substitute_monomial("x1", _unit(G, {"y1": 1}, 1)), fa * smaller,
                                   identity="x1=a*y1"))
    return _report("specialization-dwbc", params, witness, t)


def forced_corner_structure(n, convention=DEFAULT_CONVENTION):
    """Under ``x1 = y1/a``, do the surviving states all share the orientations
    of row 1 and column 1, and are there exactly ``A(n-1)`` of them?"""
    conv = Convention(convention)
    g = build_dwbc(n)
    corner = next(v for v in g.vertices if v.pos == (1, 1))
    unit = _unit(G, {"y1": 1}, -1)
    survivors = []
    for state, codes in enumerate_with_codes(g):
        w = weight_poly(codes[corner.id], corner.param, G, conv).substitute_monomial("x1", unit)
        if not w.is_zero():
            survivors.append(state)
    line_edges = [e.id for e in g.edges if e.name.startswith("h1,") or e.name.endswith(",1")]
    patterns = {tuple(s.orientation[e] for e in line_edges) for s in survivors}
    expected = asm_count_oracle(n - 1) if n > 1 else 1
    return len(survivors) == expected and len(patterns) == 1


def check_theorem_main(n, strategy="auto", trials=20, seed=0, mode=W6, transpositions=None):
    """Full symmetry of Z in all 2n variables at omega6."""
    mode = CoeffMode.parse(mode)
    if strategy == "auto":
        strategy = "symbolic" if n <= 3 else "random"
    names = _xs(n) + _ys(n)
    swaps = transpositions or _adjacent(names)
    params = {"n": n, "mode": mode.value, "strategy": strategy,
              "transpositions": [list(s) for s in swaps]}
    details = {}
    witness = None
    with _Timer() as t:
        if strategy == "symbolic":
            z = dwbc_z(n, mode)
            for u, v in swaps:
                witness = poly_witness(z, z.swap(u, v), transposition=[u, v])
                if witness:
                    break
        else:
            if mode is not W6:
                raise ValueError("random strategy evaluates at omega6")
            params.update(trials=trials, seed=seed)
            g = build_dwbc(n)
            sampler = PointSampler(seed)
            width = 2 * (n - 1)
            used = 0
            for u, v in swaps:
                for pt in sampler.points(names, trials, width=width):
                    used += 1
                    lv = transfer_matrix_partition(g, W6, point=pt)
                    rv = transfer_matrix_partition(g, W6, point=_swapped(pt, u, v))
                    if lv != rv:
                        witness = {"transposition": [u, v], "point": point_json(pt)}
                        break
                if witness:
                    break
            details = {"points": used, "rejections": sampler.rejections, "width": width}
    return _report("theorem-main", params, witness, t, details)


def check_state_counts(sizes=range(1, 7)):
    """Enumerated domain-wall states versus the monotone-triangle count."""
    sizes = list(sizes)
    params = {"sizes": sizes}
    witness = None
    counts = {}
    with _Timer() as t:
        for n in sizes:
            got = sum(1 for _ in enumerate_states(build_dwbc(n)))
            want = asm_count_oracle(n)
            counts[n] = [got, want]
            if got != want:
                witness = {"n": n, "enumerated": got, "oracle": want}
                break
    return _report("state-counts", params, witness, t, {"counts": counts})


def _homogeneous(graph, expected_count):
    ones = {v: CycNum(1) for v in _graph_vars(graph)}
    res = partition_function(graph, W6, point=ones)
    want = CycNum(-1, 2) ** len(graph.vertices) * expected_count
    if res.state_count != expected_count or res.value != want:
        return {"model": graph.model, "n": graph.n, "states": res.state_count,
                "expected_states": expected_count, "value": res.value.to_json(),
                "expected": want.to_json()}
    return None


def _graph_vars(graph):
    return sorted({var for v in graph.vertices for var in v.param})


def check_homogeneous_counts(dwbc_sizes=range(1, 6), ht_even=(1, 2), ht_odd=(1, 2)):
    """At the all-ones point every weight is ``2a - 1``, so
    ``Z = (2a-1)^{#vertices} * #states``; counts checked against oracles."""
    params = {"dwbc": list(dwbc_sizes), "ht_even": list(ht_even), "ht_odd": list(ht_odd),
              "mode": W6.value}
    witness = None
    with _Timer() as t:
        cases = ([(build_dwbc(n), asm_count_oracle(n)) for n in dwbc_sizes]
                 + [(build_ht_even(n), htasm_count_oracle(2 * n)) for n in ht_even]
                 + [(build_ht_odd(n), htasm_count_oracle(2 * n + 1)) for n in ht_odd])
        for graph, count in cases:
            witness = _homogeneous(graph, count)
            if witness:
                break
    return _report("homogeneous-counts", params, witness, t)


def check_oracle_equivalence(n, strategy="auto", trials=20, seed=0):
    """Transfer-matrix and enumeration partition functions agree."""
    if strategy == "auto":
        strategy = "symbolic" if n <= 5 else "random"
    params = {"n": n, "strategy": strategy}
    details = {}
    witness = None
    with _Timer() as t:
        g = build_dwbc(n)
        if strategy == "symbolic":
            params["mode"] = G.value
            tm = transfer_matrix_partition(g, G, raw=True)
            en = partition_function(g, G, raw=True).value
            if not tm == en:
                witness = poly_witness(tm.to_laurent(), en.to_laurent())
            details = {"terms": len(tm)}
        else:
            params.update(mode=W6.value, trials=trials, seed=seed)
            sampler = PointSampler(seed)
            pts = sampler.points(_xs(n) + _ys(n), trials, width=2 * (n - 1))
            for pt in pts:
                tv = transfer_matrix_partition(g, W6, point=pt)
                ev = partition_function(g, W6, point=pt).value
                if tv != ev:
                    witness = {"point": point_json(pt), "transfer": tv.to_json(),
                               "enumeration": ev.to_json()}
                    break
            details = {"points": len(pts), "rejections": sampler.rejections}
    return _report("oracle-equivalence", params, witness, t, details)


# ---------------------------------------------------------------------------
# half-turn models


def ht_split(graph, mode=G, convention=DEFAULT_CONVENTION):
    return partition_function(graph, mode, convention).split


def check_half_width_ht(n, family="even", mode=G):
    """Split functions are centered in ``y``: ``up``/``nw`` with half-width
    ``n-1`` and ``down``/``se`` with half-width ``n``, parity of the width."""
    mode = CoeffMode.parse(mode)
    params = {"n": n, "family": family, "mode": mode.value}
    if family == "even":
        graph, widths = build_ht_even(n), {"up": n - 1, "down": n}
    elif family == "odd":
        graph, widths = build_ht_odd(n), {"nw": n - 1, "se": n}
    else:
        raise ValueError(family)
    witness = None
    found = {}
    with _Timer() as t:
        split = ht_split(graph, mode)
        for label, w in widths.items():
            z = split[label]
            if z.is_zero():
                witness = {"split": label, "value": "0"}
                break
            lo, hi = z.degree_range("y")
            info = z.parity_and_centered("y")
            found[label] = {"range": [lo, hi], "parity": info["parity"]}
            want_parity = "even" if w % 2 == 0 else "odd"
            if (lo, hi) != (-w, w) or info["parity"] != want_parity:
                witness = {"split": label, "range": [lo, hi], "parity": info["parity"],
                           "expected_half_width": w}
                break
    return _report("half-width-ht", params, witness, t, {"found": found})


def check_pseudo_sym(n, pairs=(("up", "down"), ("down", "up"))):
    """``sigma(a^2 y/x) Z*(x,y) = sigma(a^2) Z*(y,x) + sigma(x/y) Z#(y,x)``."""
    params = {"n": n, "mode": G.value, "pairs": [list(p) for p in pairs]}
    s2 = sigma_a(G, 2)
    sxy = sigma_a(G, 0, {"x": 1, "y": -1})
    den = sigma_a(G, 2, {"y": 1, "x": -1})
    witness = None
    with _Timer() as t:
        a = ht_split(build_ht_even(n))
        b = ht_split(build_ht_even(n, x="y", y="x"))
        for star, box in pairs:
            witness = poly_witness(den * a[star], s2 * b[star] + sxy * b[box], pair=[star, box])
            if witness:
                break
    return _report("pseudo-sym", params, witness, t)


def _ht_specialization_cases(n, convention):
    """Yield ``(equation, lhs_split, rhs_split, sub_var, unit, factor)``."""
    xs, ys = _xs(n), _ys(n)
    odd = ht_split(build_ht_odd(n, xs, ys, "x", "y"), G, convention)
    yield ("impair_ax", odd, ht_split(build_ht_even(n, xs[1:], "x1", "x", ys), G, convention),
           "y", _unit(G, {"x1": 1}, 1), spec_factor_ht("A_H1", xs, ys))
    yield ("impair_bax", odd, ht_split(build_ht_even(n, xs[1:], "x", "x1", ys), G, convention),
           "y", _unit(G, {"x1": 1}, -1), spec_factor_ht("Abar_H1", xs, ys))
    xm = xs[:-1]
    even = ht_split(build_ht_even(n, xm, "x", "y", ys), G, convention)
    yield ("pair_ax", even, ht_split(build_ht_odd(n - 1, xm, ys[1:], "x", "y1"), G, convention),
           "y", _unit(G, {"y1": 1}, 1),
           standalone_prefactor("pair_ax", "x", "y1") * spec_factor_ht("A_H0", xm, ys))
    yield ("pair_bax", even, ht_split(build_ht_odd(n - 1, xm, ys[1:], "y", "y1"), G, convention),
           "x", _unit(G, {"y1": 1}, -1),
           standalone_prefactor("pair_bax", "y", "y1") * spec_factor_ht("Abar_H0", xm, ys))


def check_specialization_ht(n, convention=DEFAULT_CONVENTION, pairings=None):
    """The four half-turn specialization identities at size ``n``."""
    conv = Convention(convention)
    pairings = pairings or HT_PAIRINGS
    params = {"n": n, "mode": G.value, "convention": conv.value,
              "pairings": {k: [list(p) for p in v] for k, v in pairings.items()}}
    witness = None
    with _Timer() as t:
        for eq, lhs, rhs, var, unit, factor in _ht_specialization_cases(n, conv):
            for left, right in pairings[eq]:
                witness = poly_witness(lhs[left].substitute_monomial(var, unit),
                                       factor * rhs[right], equation=eq, pair=[left, right])
                if witness:
                    break
            if witness:
                break
    return _report("specialization-ht", params, witness, t)


def ht_theorem_graph(n, family, x_equals_y=True):
    xs, ys = _xs(n), _ys(n)
    if family == "odd":
        return build_ht_odd(n, xs, ys, "x", "y"), xs + ys
    if x_equals_y:
        return build_ht_even(n, xs[:-1], xs[-1], xs[-1], ys), xs + ys
    return build_ht_even(n, xs[:-1], "x", "y", ys), xs[:-1] + ["x", "y"] + ys


def check_theorem_ht(n, family="odd", strategy="auto", trials=20, seed=0, mode=W6,
                     x_equals_y=True, transpositions=None):
    """Symmetry of the half-turn partition function in its 2n line variables
    (even family: with the two central row parameters equal)."""
    mode = CoeffMode.parse(mode)
    if strategy == "auto":
        strategy = "symbolic" if n <= 1 else "random"
    graph, names = ht_theorem_graph(n, family, x_equals_y)
    if transpositions is None:
        plain = [v for v in names if v not in ("x", "y")]
        transpositions = _adjacent(plain)
    params = {"n": n, "family": family, "mode": mode.value, "strategy": strategy,
              "x_equals_y": x_equals_y, "transpositions": [list(s) for s in transpositions]}
    details = {}
    witness = None
    with _Timer() as t:
        if strategy == "symbolic":
            z = partition_function(graph, mode).value
            for u, v in transpositions:
                witness = poly_witness(z, z.swap(u, v), transposition=[u, v])
                if witness:
                    break
        else:
            if mode is not W6:
                raise ValueError("random strategy evaluates at omega6")
            params.update(trials=trials, seed=seed)
            variables = _graph_vars(graph)
            width = 2 * max(sum(1 for vx in graph.vertices if var in vx.param) for var in variables)
            sampler = PointSampler(seed)
            used = 0
            for u, v in transpositions:
                for pt in sampler.points(variables, trials, width=width):
                    used += 1
                    lv = partition_function(graph, W6, point=pt).value
                    rv = partition_function(graph, W6, point=_swapped(pt, u, v)).value
                    if lv != rv:
                        witness = {"transposition": [u, v], "point": point_json(pt)}
                        break
                if witness:
                    break
            details = {"points": used, "rejections": sampler.rejections, "width": width}
    return _report("theorem-ht", params, witness, t, details)


def check_ht_counts(even_orders=(2, 4, 6), odd_orders=(1, 3, 5)):
    """Quotient-graph state counts versus filtered full ASM lists."""
    params = {"even_orders": list(even_orders), "odd_orders": list(odd_orders)}
    witness = None
    counts = {}
    with _Timer() as t:
        cases = ([(o, build_ht_even(o // 2)) for o in even_orders]
                 + [(o, build_ht_odd(o // 2)) for o in odd_orders])
        for order, graph in cases:
            got = sum(1 for _ in enumerate_states(graph))
            want = htasm_count_oracle(order)
            counts[order] = [got, want]
            if got != want:
                witness = {"order": order, "enumerated": got, "oracle": want}
                break
    return _report("ht-counts", params, witness, t, {"counts": counts})


# ---------------------------------------------------------------------------
# calibration


def check_calibration(dwbc_sizes=(2, 3, 4), ht_sizes=(1, 2)):
    """Exactly one weight convention satisfies the domain-wall recursion
    (identities plus the forced corner structure) and the half-turn
    specializations; it must be the default."""
    params = {"dwbc_sizes": list(dwbc_sizes), "ht_sizes": list(ht_sizes)}
    outcome = {}
    with _Timer() as t:
        for conv in Convention:
            dw = all(check_specialization_dwbc(n, conv).passed for n in dwbc_sizes)
            forced = all(forced_corner_structure(n, conv) for n in dwbc_sizes if n <= 3)
            ht = all(check_specialization_ht(n, conv).passed for n in ht_sizes)
            outcome[conv.value] = {"dwbc_identities": dw, "forced_structure": forced,
                                   "ht_specializations": ht, "passes": dw and forced and ht}
        winners = [c for c, o in outcome.items() if o["passes"]]
        witness = None
        if winners != [DEFAULT_CONVENTION.value]:
            witness = {"passing": winners, "default": DEFAULT_CONVENTION.value}
    return _report("calibration", params, witness, t,
                   {"outcome": outcome, "selected": winners[0] if len(winners) == 1 else None})
