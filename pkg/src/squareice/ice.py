"""Ice graphs: construction, state enumeration and the ASM bijection.

A graph is a set of tetravalent vertices whose slots ``W, E, N, S`` hold
edges.  An edge has two ends; an end is either a vertex slot ``(vid, slot)``
or ``None`` (a free stub leaving the graph).  A state assigns each edge a
boolean ``forward`` meaning the arrow runs from ``ends[0]`` to ``ends[1]``.
Grid edges are built with ``ends[0]`` on the left/bottom, so ``forward`` is
"arrow points east/north".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

SLOTS = ("W", "E", "N", "S")

# Slot "in" flags (W, E, N, S) for the six orientations, in the order of the
# standard weight picture.
ORIENTATIONS = {
    (True, True, False, False): "O1",    # horizontals in, verticals out
    (False, False, True, True): "O2",    # horizontals out, verticals in
    (False, True, False, True): "O3",    # arrows west and north
    (True, False, True, False): "O4",    # arrows east and south
    (True, False, False, True): "O5",    # arrows east and north
    (False, True, True, False): "O6",    # arrows west and south
}
ASM_ENTRY = {"O1": 1, "O2": -1, "O3": 0, "O4": 0, "O5": 0, "O6": 0}


class SizeMismatch(ValueError):
    pass


class MalformedSpec(ValueError):
    pass


class NotDwbcGraph(ValueError):
    pass


class InvalidAsm(ValueError):
    pass


@dataclass
class Vertex:
    id: int
    param: dict            # vertex parameter t as a monomial {var: exp}
    slots: dict            # slot -> edge id
    pos: tuple = ()        # (row, col) for grid models, row 1 at the bottom
    name: str = ""


@dataclass
class Edge:
    id: int
    ends: tuple            # two ends, each (vertex id, slot) or None
    name: str = ""


@dataclass
class IceGraph:
    model: str
    n: int
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    constraints: dict = field(default_factory=dict)   # edge id -> forward
    param_change_marks: set = field(default_factory=set)
    split_edge: int | None = None
    split_labels: tuple = ("forward", "backward")
    xs: tuple = ()
    ys: tuple = ()

    # -- construction helpers --------------------------------------------

    def add_vertex(self, param, pos=(), name=""):
        v = Vertex(len(self.vertices), dict(param), {}, pos, name)
        self.vertices.append(v)
        return v.id

    def add_edge(self, u, v, name=""):
        e = Edge(len(self.edges), (u, v), name)
        for end in (u, v):
            if end is not None:
                vid, slot = end
                if slot in self.vertices[vid].slots:
                    raise MalformedSpec(f"slot {slot} of vertex {vid} used twice")
                self.vertices[vid].slots[slot] = e.id
        self.edges.append(e)
        return e.id

    def edge_by_name(self, name):
        for e in self.edges:
            if e.name == name:
                return e.id
        raise KeyError(name)

    def validate(self):
        for v in self.vertices:
            if set(v.slots) != set(SLOTS):
                raise MalformedSpec(f"vertex {v.id} has slots {sorted(v.slots)}")
        for e in self.edges:
            ends = [end for end in e.ends if end is not None]
            for vid, slot in ends:
                if self.vertices[vid].slots.get(slot) != e.id:
                    raise MalformedSpec(f"edge {e.id} not registered at {vid}.{slot}")
        return self

    def free_external_edges(self):
        return [e.id for e in self.edges
                if (e.ends[0] is None or e.ends[1] is None) and e.id not in self.constraints]

    def with_constraints(self, extra):
        g = IceGraph(self.model, self.n, self.vertices, self.edges,
                     {**self.constraints, **extra}, self.param_change_marks,
                     self.split_edge, self.split_labels, self.xs, self.ys)
        return g

    # -- orientation helpers ---------------------------------------------

    def slot_in(self, vid, slot, orient):
        """True iff the edge at ``vid.slot`` points into the vertex."""
        e = self.edges[self.vertices[vid].slots[slot]]
        fwd = orient[e.id]
        if e.ends[0] == (vid, slot) and e.ends[1] == (vid, slot):
            raise MalformedSpec("degenerate edge")
        if e.ends[1] == (vid, slot):
            return fwd
        return not fwd

    def vertex_orientation(self, vid, orient):
        flags = tuple(self.slot_in(vid, s, orient) for s in SLOTS)
        return ORIENTATIONS[flags]

    def external_in(self, eid, forward):
        """For a stub edge, whether ``forward`` means pointing into the graph."""
        e = self.edges[eid]
        if e.ends[0] is None:
            return forward
        return not forward


@dataclass(frozen=True)
class IceState:
    orientation: tuple     # forward flag per edge id

    def to_json(self, graph):
        out = []
        for e in graph.edges:
            fwd = self.orientation[e.id]
            head = e.ends[1] if fwd else e.ends[0]
            out.append({"id": e.id, "dir": "ext" if head is None else head[0]})
        return {"model": graph.model, "n": graph.n, "edges": out}


# ---------------------------------------------------------------------------
# builders


def _check_names(n, xs, ys, nx, ny):
    if n < 1:
        raise SizeMismatch(f"size must be >= 1, got {n}")
    if len(xs) != nx or len(ys) != ny:
        raise SizeMismatch(f"expected {nx} row and {ny} column variables")


def build_dwbc(n, xs=None, ys=None):
    """n x n grid with domain wall boundary.

    Row ``i`` (1 = bottom) carries ``xs[i-1]``, column ``j`` (1 = left)
    carries ``ys[j-1]``.  Horizontal boundary arrows point into the grid,
    vertical boundary arrows point out of it.
    """
    xs = tuple(xs) if xs is not None else tuple(f"x{i}" for i in range(1, n + 1))
    ys = tuple(ys) if ys is not None else tuple(f"y{j}" for j in range(1, n + 1))
    _check_names(n, xs, ys, n, n)
    g = IceGraph("dwbc", n, xs=xs, ys=ys)
    vid = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            vid[i, j] = g.add_vertex(_line_param(xs[i - 1], ys[j - 1]), (i, j))
    for i in range(1, n + 1):
        for j in range(1, n + 2):
            left = (vid[i, j - 1], "E") if j > 1 else None
            right = (vid[i, j], "W") if j <= n else None
            e = g.add_edge(left, right, f"h{i},{j}")
            if j == 1:
                g.constraints[e] = True
            elif j == n + 1:
                g.constraints[e] = False
    for j in range(1, n + 1):
        for i in range(1, n + 2):
            below = (vid[i - 1, j], "N") if i > 1 else None
            above = (vid[i, j], "S") if i <= n else None
            e = g.add_edge(below, above, f"v{i},{j}")
            if i == 1:
                g.constraints[e] = False
            elif i == n + 1:
                g.constraints[e] = True
    return g.validate()


def _line_param(row, col):
    if row == col:
        return {}
    return {row: 1, col: -1}


def build_ht_even(n, xs=None, x="x", y="y", ys=None):
    """Half-turn quotient of the 2n x 2n domain-wall grid.

    2n rows by n columns.  Rows bottom to top carry x_1..x_{n-1}, x, y,
    x_{n-1}..x_1; the right ends of rows i and 2n+1-i are joined by a U-turn
    arc.  The central arc (rows n, n+1) is where the parameter changes from x
    to y; it is the split edge, ``up`` meaning the arrow runs from the x row
    into the y row.
    """
    xs = tuple(xs) if xs is not None else tuple(f"x{i}" for i in range(1, n))
    ys = tuple(ys) if ys is not None else tuple(f"y{j}" for j in range(1, n + 1))
    _check_names(n, xs, ys, n - 1, n)
    rows = list(xs) + [x, y] + list(reversed(xs))
    g = IceGraph("ht-even", n, xs=xs + (x, y), ys=ys, split_labels=("up", "down"))
    nrows = 2 * n
    vid = {}
    for i in range(1, nrows + 1):
        for j in range(1, n + 1):
            vid[i, j] = g.add_vertex(_line_param(rows[i - 1], ys[j - 1]), (i, j))
    for i in range(1, nrows + 1):
        for j in range(1, n + 1):
            left = (vid[i, j - 1], "E") if j > 1 else None
            e = g.add_edge(left, (vid[i, j], "W"), f"h{i},{j}")
            if j == 1:
                g.constraints[e] = True
    for i in range(1, n + 1):
        e = g.add_edge((vid[i, n], "E"), (vid[nrows + 1 - i, n], "E"), f"arc{i}")
        if i == n:
            g.split_edge = e
            g.param_change_marks.add(e)
    _add_columns(g, vid, n, nrows)
    return g.validate()


def _add_columns(g, vid, ncols, nrows, heights=None):
    for j in range(1, ncols + 1):
        for i in range(1, nrows + 2):
            below = (vid[i - 1, j], "N") if i > 1 else None
            above = (vid[i, j], "S") if i <= nrows else None
            e = g.add_edge(below, above, f"v{i},{j}")
            if i == 1:
                g.constraints[e] = False
            elif i == nrows + 1:
                g.constraints[e] = True


def build_ht_odd(n, xs=None, ys=None, x="x", y="y"):
    """Half-turn quotient of the (2n+1) x (2n+1) domain-wall grid.

    Columns 1..n are full height (2n+1 rows) and carry y_1..y_n; the lower
    half of the central column (rows 1..n) carries y.  Rows 1..n carry
    x_1..x_n, the central row carries x, rows n+2..2n+1 carry x_n..x_1.  The
    right end of row i (in the central column) is joined by an arc to the
    right end of row 2n+2-i (in column n).

    The central row and the lower central column form a single bent line
    through the fixed point of the half turn, where the parameter changes
    from x to y.  Identifying the edges on either side of the centre leaves
    one bent edge with no vertex weight; it is the split edge, ``se``
    meaning the arrow runs from the row into the column (centre entry +1)
    and ``nw`` the reverse (centre entry -1).

    ``n = 0`` gives the order-1 model: just the bent edge, forced ``se``.
    """
    xs = tuple(xs) if xs is not None else tuple(f"x{i}" for i in range(1, n + 1))
    ys = tuple(ys) if ys is not None else tuple(f"y{j}" for j in range(1, n + 1))
    if n < 0 or len(xs) != n or len(ys) != n:
        raise SizeMismatch("expected n row and n column variables")
    g = IceGraph("ht-odd", n, xs=xs + (x,), ys=ys + (y,), split_labels=("se", "nw"))
    nrows = 2 * n + 1
    rows = list(xs) + [x] + list(reversed(xs))
    vid = {}
    for i in range(1, nrows + 1):
        for j in range(1, n + 1):
            vid[i, j] = g.add_vertex(_line_param(rows[i - 1], ys[j - 1]), (i, j))
    for i in range(1, n + 1):
        vid[i, n + 1] = g.add_vertex(_line_param(rows[i - 1], y), (i, n + 1))
    for i in range(1, nrows + 1):
        last = n + 1 if i <= n else n
        for j in range(1, last + 1):
            left = (vid[i, j - 1], "E") if j > 1 else None
            e = g.add_edge(left, (vid[i, j], "W"), f"h{i},{j}")
            if j == 1:
                g.constraints[e] = True
    for i in range(1, n + 1):
        g.add_edge((vid[i, n + 1], "E"), (vid[nrows + 1 - i, n], "E"), f"arc{i}")
    _add_columns(g, vid, n, nrows)
    for i in range(1, n + 1):
        below = (vid[i - 1, n + 1], "N") if i > 1 else None
        e = g.add_edge(below, (vid[i, n + 1], "S"), f"v{i},{n + 1}")
        if i == 1:
            g.constraints[e] = False
    row_end = (vid[n + 1, n], "E") if n else None
    col_top = (vid[n, n + 1], "N") if n else None
    bent = g.add_edge(row_end, col_top, "bend")
    if n == 0:
        g.constraints[bent] = True
    g.split_edge = bent
    g.param_change_marks.add(bent)
    return g.validate()


def center_orientation(graph, state):
    """For odd half-turn models: O1 if the bent central edge runs from the row
    into the column (centre ASM entry +1), else O2."""
    if graph.model != "ht-odd":
        raise ValueError("only odd half-turn models have a centre")
    return "O1" if state.orientation[graph.split_edge] else "O2"


def build_tangle(spec):
    """Build a small ice graph from a dict description.

    ``spec = {"vertices": [{"name": ..., "param": {var: exp},
    "slots": {"W": edge_name, "E": ..., "N": ..., "S": ...}}, ...],
    "fixed": {edge_name: "in" | "out"}}``.  An edge name used by two slots
    is internal (possibly a loop at one vertex); used once it is a stub
    leaving the tangle.  ``fixed`` orientations are relative to the tangle.
    """
    try:
        vertices = spec.get("vertices", [])
        fixed = spec.get("fixed", {})
        g = IceGraph(spec.get("model", "tangle"), len(vertices))
        uses = {}
        for vs in vertices:
            vid = g.add_vertex(vs.get("param", {}), name=vs.get("name", ""))
            slots = vs["slots"]
            if set(slots) != set(SLOTS):
                raise MalformedSpec(f"vertex {vs.get('name')} must fill W, E, N, S")
            for slot in SLOTS:
                uses.setdefault(slots[slot], []).append((vid, slot))
        for name in sorted(uses, key=lambda nm: uses[nm][0]):
            ends = uses[name]
            if len(ends) > 2:
                raise MalformedSpec(f"edge {name!r} used by {len(ends)} slots")
            u = ends[0]
            v = ends[1] if len(ends) == 2 else None
            eid = g.add_edge(u, v, name)
            if name in fixed:
                if v is not None:
                    raise MalformedSpec(f"internal edge {name!r} cannot be fixed")
                if fixed[name] not in ("in", "out"):
                    raise MalformedSpec(f"orientation of {name!r} must be 'in' or 'out'")
                g.constraints[eid] = fixed[name] == "out"
        unknown = set(fixed) - set(uses)
        if unknown:
            raise MalformedSpec(f"fixed orientation for unknown edges {sorted(unknown)}")
    except (KeyError, TypeError, AttributeError) as exc:
        raise MalformedSpec(str(exc)) from exc
    return g.validate()


# ---------------------------------------------------------------------------
# enumeration


def _vertex_order(graph):
    """Row-major (bottom row first) for grid models, insertion order otherwise."""
    return sorted(range(len(graph.vertices)),
                  key=lambda v: (graph.vertices[v].pos, v) if graph.vertices[v].pos else ((), v))


class _Search:
    """Vertex-by-vertex backtracking over edge orientations.

    Visiting a vertex decides all its undecided edges, so a vertex with three
    decided edges has its fourth forced.  Every other endpoint touched by a
    decision is checked for more than two in- or out-arrows immediately.
    """

    def __init__(self, graph):
        self.g = graph
        self.order = _vertex_order(graph)
        self.orient = [None] * len(graph.edges)
        for eid, fwd in graph.constraints.items():
            self.orient[eid] = fwd
        # edges touching no vertex at all (order-1 odd model)
        for e in graph.edges:
            if e.ends[0] is None and e.ends[1] is None and self.orient[e.id] is None:
                self.orient[e.id] = True
        self.slot_info = []
        for v in graph.vertices:
            info = []
            for slot in SLOTS:
                e = graph.edges[v.slots[slot]]
                info.append((e.id, e.ends[1] == (v.id, slot)))
            self.slot_info.append(info)

    def _feasible(self, vid):
        ins = outs = 0
        for eid, is_head in self.slot_info[vid]:
            f = self.orient[eid]
            if f is None:
                continue
            if f == is_head:
                ins += 1
            else:
                outs += 1
        return ins <= 2 and outs <= 2

    def options(self, vid):
        """Yield (orientation code, undecided edge ids) for each completion."""
        info = self.slot_info[vid]
        free_edges = []
        for eid, _ in info:
            if self.orient[eid] is None and eid not in free_edges:
                free_edges.append(eid)
        # "up/right first": forward (east/north) tried first
        for bits in itertools.product((True, False), repeat=len(free_edges)):
            for eid, b in zip(free_edges, bits):
                self.orient[eid] = b
            flags = tuple(self.orient[eid] == is_head for eid, is_head in info)
            code = ORIENTATIONS.get(flags)
            ok = code is not None and all(
                self._feasible(other) for other in self._neighbours(vid, free_edges))
            if ok:
                yield code, free_edges
            for eid in free_edges:
                self.orient[eid] = None

    def _neighbours(self, vid, eids):
        out = []
        for eid in eids:
            for end in self.g.edges[eid].ends:
                if end is not None and end[0] != vid:
                    out.append(end[0])
        return out

    def final_ok(self):
        return all(o is not None for o in self.orient)


def enumerate_states(graph):
    """Every ice state of ``graph`` exactly once, in a deterministic order."""
    search = _Search(graph)
    order = search.order
    codes = [None] * len(graph.vertices)

    def rec(depth):
        if depth == len(order):
            if search.final_ok():
                yield IceState(tuple(search.orient)), dict(enumerate(codes))
            return
        vid = order[depth]
        for code, _ in search.options(vid):
            codes[vid] = code
            yield from rec(depth + 1)
            codes[vid] = None

    for state, _ in rec(0):
        yield state


def enumerate_with_codes(graph):
    """Like :func:`enumerate_states` but also yields the per-vertex codes."""
    search = _Search(graph)
    order = search.order
    codes = [None] * len(graph.vertices)

    def rec(depth):
        if depth == len(order):
            if search.final_ok():
                yield IceState(tuple(search.orient)), tuple(codes)
            return
        vid = order[depth]
        for code, _ in search.options(vid):
            codes[vid] = code
            yield from rec(depth + 1)
            codes[vid] = None

    yield from rec(0)


def state_sum(graph, weight, one, zero):
    """Sum over states of the product of ``weight(vid, code)``.

    Evaluated on the search tree Horner-style: each subtree's total is
    multiplied by the weight of the vertex decided at its root, so shared
    prefixes are multiplied once.  No two subtrees are merged.
    """
    search = _Search(graph)
    order = search.order
    count = [0]

    def rec(depth):
        if depth == len(order):
            if search.final_ok():
                count[0] += 1
                return one
            return zero
        vid = order[depth]
        total = zero
        for code, _ in search.options(vid):
            sub = rec(depth + 1)
            if sub is not zero:
                total = total + weight(vid, code) * sub
        return total

    return rec(0), count[0]


def check_state(graph, state):
    """Assert the ice rule at every vertex and all fixed orientations."""
    for eid, fwd in graph.constraints.items():
        if state.orientation[eid] != fwd:
            return False
    for v in graph.vertices:
        flags = tuple(graph.slot_in(v.id, s, state.orientation) for s in SLOTS)
        if flags not in ORIENTATIONS:
            return False
    return True


# ---------------------------------------------------------------------------
# ASMs


def is_asm(m):
    n = len(m)
    if any(len(row) != n for row in m):
        return False
    lines = [list(row) for row in m] + [[m[i][j] for i in range(n)] for j in range(n)]
    for line in lines:
        if any(v not in (-1, 0, 1) for v in line):
            return False
        nz = [v for v in line if v]
        if sum(nz) != 1 or nz[0] != 1:
            return False
        if any(p == q for p, q in zip(nz, nz[1:])):
            return False
    return True


def state_to_asm(graph, state):
    """ASM of a domain-wall state; matrix row 0 is the top grid row."""
    if graph.model != "dwbc":
        raise NotDwbcGraph(graph.model)
    n = graph.n
    m = [[0] * n for _ in range(n)]
    for v in graph.vertices:
        i, j = v.pos
        m[n - i][j - 1] = ASM_ENTRY[graph.vertex_orientation(v.id, state.orientation)]
    return m


def asm_to_state(graph, m):
    if graph.model != "dwbc":
        raise NotDwbcGraph(graph.model)
    n = graph.n
    if len(m) != n or not is_asm(m):
        raise InvalidAsm(f"not an ASM of size {n}: {m}")
    orient = [None] * len(graph.edges)
    for e in graph.edges:
        kind, rest = e.name[0], e.name[1:]
        i, j = map(int, rest.split(","))
        if kind == "h":
            # grid row i, edge left of column j: arrow east iff row sum so far is 0
            row = m[n - i]
            orient[e.id] = sum(row[: j - 1]) == 0
        else:
            # grid column j, edge below row i: arrow north iff nothing above
            col_above = [m[n - r][j - 1] for r in range(i, n + 1)]
            orient[e.id] = sum(col_above) == 0
    state = IceState(tuple(orient))
    if not check_state(graph, state):
        raise InvalidAsm("ASM does not give an ice state")
    return state


def format_asm(m):
    return "\n".join(" ".join(str(v) for v in row) for row in m)


def parse_asm(text):
    return [[int(tok) for tok in line.split()] for line in text.strip().splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# independent oracles (monotone triangles; no ice-model code)


def _interlacing_rows(row):
    """Strictly increasing rows one shorter than ``row`` that interlace it."""
    k = len(row) - 1

    def rec(i, prev):
        if i == k:
            yield ()
            return
        lo = max(row[i], prev + 1)
        for val in range(lo, row[i + 1] + 1):
            for rest in rec(i + 1, val):
                yield (val,) + rest

    yield from rec(0, -10 ** 9)


@lru_cache(maxsize=None)
def _count_triangles(row):
    if len(row) == 1:
        return 1
    return sum(_count_triangles(r) for r in _interlacing_rows(row))


def asm_count_oracle(n):
    """Number of n x n ASMs, counted as monotone triangles with bottom row 1..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _count_triangles(tuple(range(1, n + 1)))


def all_asms(n):
    """Every n x n ASM, generated from monotone triangles."""

    def rec(row):
        if len(row) == 1:
            yield [row]
            return
        for r in _interlacing_rows(row):
            for tri in rec(r):
                yield tri + [row]

    for tri in rec(tuple(range(1, n + 1))):
        m = []
        prev = set()
        for row in tri:
            cur = set(row)
            m.append([(1 if c in cur else 0) - (1 if c in prev else 0) for c in range(1, n + 1)])
            prev = cur
        yield m


def is_half_turn_symmetric(m):
    n = len(m)
    return all(m[i][j] == m[n - 1 - i][n - 1 - j] for i in range(n) for j in range(n))


def htasm_count_oracle(order):
    """Brute-force count of half-turn symmetric ASMs of the given order."""
    return sum(1 for m in all_asms(order) if is_half_turn_symmetric(m))
