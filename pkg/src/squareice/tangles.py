"""Small tangles used by the local identities.

Slots follow one rule: going counterclockwise around a crossing, the sector
holding the vertex's parameter label lies between the ``W`` and ``S``
half-edges (as in the weight picture, where the label sits south-west of the
crossing).  The weight of a configuration then only depends on the label
sector, since a quarter turn exchanges ``t`` with ``1/t`` together with the
two zero-entry weight classes.
"""

from __future__ import annotations

import itertools

from .ice import build_tangle

# Stub names shared by both sides of the three-crossing identity, by position:
# bottom, top, upper-left, lower-right, upper-right, lower-left.
YB_STUBS = ("s_b", "s_t", "s_ul", "s_lr", "s_ur", "s_ll")


def yang_baxter_left(x="x", y="y", z="z"):
    """Vertical line on the right of the crossing of the two diagonals."""
    return [
        {"name": "z", "param": {z: 1}, "slots": {"W": "s_b", "S": "s_lr", "E": "e_zx", "N": "e_yz"}},
        {"name": "x", "param": {x: 1}, "slots": {"W": "s_ur", "S": "s_t", "E": "e_xy", "N": "e_zx"}},
        {"name": "y", "param": {y: 1}, "slots": {"W": "s_ul", "S": "s_ll", "E": "e_yz", "N": "e_xy"}},
    ]


def yang_baxter_right(x="x", y="y", z="z"):
    """Mirror image: vertical line on the left."""
    return [
        {"name": "x", "param": {x: 1}, "slots": {"W": "s_ll", "S": "s_b", "E": "f_xy", "N": "f_xz"}},
        {"name": "z", "param": {z: 1}, "slots": {"W": "s_t", "S": "s_ul", "E": "f_xz", "N": "f_zy"}},
        {"name": "y", "param": {y: 1}, "slots": {"W": "s_lr", "S": "s_ur", "E": "f_zy", "N": "f_xy"}},
    ]


def loop_tangle(z="z"):
    """One crossing whose two right-hand ends are joined by a U-turn arc.

    The label sits on the left, between the two external stubs ``top``
    and ``bottom``.
    """
    return [{"name": "z", "param": {z: 1},
             "slots": {"W": "top", "S": "bottom", "E": "arc", "N": "arc"}}]


def row_pair(width, bottom="x", top="y", cols=None, right="arc"):
    """Two rows (``bottom`` below ``top``) crossing ``width`` columns.

    Rows enter from the left; the left stubs are ``in_b``/``in_t``.  Column
    ``j`` has stubs ``c{j}_lo`` and ``c{j}_hi``.  ``right="arc"`` joins the
    right ends by a U-turn arc; ``right="open"`` leaves stubs ``out_b`` and
    ``out_t``.
    """
    cols = list(cols) if cols is not None else [f"y{j}" for j in range(1, width + 1)]
    verts = []
    for r, (row, tag) in enumerate(((bottom, "b"), (top, "t"))):
        for j in range(1, width + 1):
            west = f"in_{tag}" if j == 1 else f"h{tag}{j}"
            if j < width:
                east = f"h{tag}{j + 1}"
            else:
                east = "arc" if right == "arc" else f"out_{tag}"
            south = f"c{j}_lo" if r == 0 else f"c{j}_mid"
            north = f"c{j}_mid" if r == 0 else f"c{j}_hi"
            verts.append({"name": f"{tag}{j}", "param": _ratio(row, cols[j - 1]),
                          "slots": {"W": west, "E": east, "N": north, "S": south}})
    return verts


def _ratio(row, col):
    return {} if row == col else {row: 1, col: -1}


def column_stubs(width):
    return [f"c{j}_{end}" for j in range(1, width + 1) for end in ("lo", "hi")]


def assignments(stubs):
    """Every in/out assignment of ``stubs``, in a fixed order."""
    for bits in itertools.product(("in", "out"), repeat=len(stubs)):
        yield dict(zip(stubs, bits))


def tangle_graph(vertices, fixed=None):
    return build_tangle({"vertices": vertices, "fixed": dict(fixed or {})})


NAMED = {
    "yb-left": lambda size: yang_baxter_left(),
    "yb-right": lambda size: yang_baxter_right(),
    "loop": lambda size: loop_tangle(),
    "row-pair": lambda size: row_pair(size),
    "row-pair-open": lambda size: row_pair(size, right="open"),
}
