"""Serialization: JSON tree records, Graphviz DOT, CSV tables and SVG figures."""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction

from .core import ElepPair, metrics
from .eisenstein import EPoint, omega_str, to_cartesian
from .families import OrientedRealization, table_row
from .tree import EdgeLabel, TreeNode

SAFE_INT = 2**53


def num(v: int):
    """JSON-safe integer: plain number below 2**53, decimal string above."""
    return v if -SAFE_INT < v < SAFE_INT else str(v)


def unnum(v) -> int:
    return int(v)


def frac(v: Fraction) -> str:
    return str(v)


# --- tree -----------------------------------------------------------------


def tree_record(node: TreeNode) -> dict:
    p = node.pair
    edge = None
    if node.parent_edge is not None:
        edge = {"map": f"phi{node.parent_edge.map_index}", "u": num(node.parent_edge.u_value)}
    return {
        "a": num(p.a),
        "b": num(p.b),
        "s": num(p.s),
        "t": num(p.t),
        "sigma": p.sigma,
        "depth": node.depth,
        "parent_edge": edge,
        "children": [tree_record(child) for _, child in node.children],
    }


def tree_from_record(rec: dict, parent: ElepPair | None = None) -> TreeNode:
    pair = ElepPair.from_params(unnum(rec["s"]), unnum(rec["t"]))
    if (pair.a, pair.b, pair.sigma) != (unnum(rec["a"]), unnum(rec["b"]), rec["sigma"]):
        raise ValueError(f"inconsistent record {rec}")
    edge = None
    if rec["parent_edge"] is not None:
        u = unnum(rec["parent_edge"]["u"])
        choice = "a" if parent is not None and u == parent.a else "b"
        edge = EdgeLabel(int(rec["parent_edge"]["map"][-1]), choice, u)
    node = TreeNode(pair, rec["depth"], edge)
    for child_rec in rec["children"]:
        child = tree_from_record(child_rec, pair)
        node.children.append((child.parent_edge, child))
    return node


def tree_json(node: TreeNode) -> str:
    return json.dumps(tree_record(node), indent=1)


def tree_dot(node: TreeNode) -> str:
    ids = {}
    lines = ["digraph elep_tree {", "  node [shape=plaintext];"]
    for i, n in enumerate(node.walk()):
        ids[id(n)] = f"n{i}"
        p = n.pair
        lines.append(f'  n{i} [label="({p.a},{p.b})\\n({p.s},{p.t})"];')
    for n in node.walk():
        for label, child in n.children:
            lines.append(f'  {ids[id(n)]} -> {ids[id(child)]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_csv(node: TreeNode) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["id", "parent", "depth", "a", "b", "s", "t", "sigma", "map", "u"])
    ids = {}
    parents = {}
    for i, n in enumerate(node.walk()):
        ids[id(n)] = i
        for _, child in n.children:
            parents[id(child)] = i
    for n in node.walk():
        p, e = n.pair, n.parent_edge
        w.writerow([
            ids[id(n)], parents.get(id(n), ""), n.depth, p.a, p.b, p.s, p.t, p.sigma,
            f"phi{e.map_index}" if e else "", e.u_value if e else "",
        ])
    return buf.getvalue()


# --- families -------------------------------------------------------------

FAMILY_COLUMNS = {
    "horizontal": ["n", "(q,u)", "a", "b", "A", "B", "(s,t)"],
    "vs2": ["n", "(u,m)", "b", "x", "y", "(s,t)"],
    "vs4": ["n", "(w,y)", "b", "x", "(s,t)"],
}


def _cell(v) -> str:
    if isinstance(v, EPoint):
        return omega_str(v)
    if isinstance(v, tuple):
        return "(" + ",".join(str(c) for c in v) + ")"
    return str(v)


def family_csv(members: list[OrientedRealization]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    tag = members[0].family_tag if members else "horizontal"
    cols = FAMILY_COLUMNS["vs4" if tag.startswith("vs4") else tag]
    w.writerow(cols)
    for m in members:
        row = table_row(m)
        w.writerow([_cell(row[c]) for c in cols])
    return buf.getvalue()


# --- realizations ---------------------------------------------------------


def vertex_record(name: str, p: EPoint) -> dict:
    cx, cy = to_cartesian(p)
    return {
        "name": name,
        "omega": [num(p.x), num(p.y)],
        "omega_str": omega_str(p),
        "cartesian": {"x": frac(cx), "y_sqrt3": frac(cy)},
    }


def realization_record(v1: EPoint, v2: EPoint, pair: ElepPair) -> dict:
    met = metrics(pair)
    verts = zip("OABC", (EPoint(0, 0), v1, v1 + v2, v2))
    return {
        "a": num(pair.a),
        "b": num(pair.b),
        "s": num(pair.s),
        "t": num(pair.t),
        "determinant": num(abs(v1.x * v2.y - v2.x * v1.y)),
        "vertices": [vertex_record(n, p) for n, p in verts],
        "dl_sq": num(met.dl_sq),
        "ds_sq": num(met.ds_sq),
    }


def realization_svg(vertices, scale: float = 40.0, labels: bool = False, margin: int = 1) -> str:
    """Lattice dots over the bounding box plus the filled parallelogram."""
    half = math.sqrt(3) / 2
    carts = [(float(cx), float(cy) * 2 * half) for cx, cy in map(to_cartesian, vertices)]
    xmin = min(c[0] for c in carts) - margin
    xmax = max(c[0] for c in carts) + margin
    ymin = min(c[1] for c in carts) - margin
    ymax = max(c[1] for c in carts) + margin
    width, height = (xmax - xmin) * scale, (ymax - ymin) * scale

    def sx(x):
        return (x - xmin) * scale

    def sy(y):
        return (ymax - y) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2f}" '
        f'height="{height:.2f}" viewBox="0 0 {width:.2f} {height:.2f}">',
        '<g fill="black">',
    ]
    r = max(scale * 0.04, 0.5)
    for j in range(math.floor(ymin / half), math.ceil(ymax / half) + 1):
        y = j * half
        for i in range(math.floor(xmin + j / 2), math.ceil(xmax + j / 2) + 1):
            x = i - j / 2
            if xmin <= x <= xmax and ymin <= y <= ymax:
                out.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="{r:.2f}"/>')
    out.append("</g>")
    pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in carts)
    out.append(f'<polygon points="{pts}" fill="#c6d4f5" fill-opacity="0.8" stroke="#1f3fbf" stroke-width="2"/>')
    if labels:
        for name, p, (x, y) in zip("OABC", vertices, carts):
            out.append(
                f'<text x="{sx(x) + 4:.2f}" y="{sy(y) - 4:.2f}" font-size="{scale * 0.35:.1f}">'
                f"{name}={omega_str(p)}</text>"
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
