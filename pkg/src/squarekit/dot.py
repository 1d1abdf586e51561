"""DOT export for squares, staircases and ladders.

Style rules: solid edges are h-mors, dashed edges are v-mors, and each
elementary square gets its own cluster subgraph.  Positions joined by an
identity morphism are drawn as a single node, so identity edges never show
up as self-loops.
"""
from __future__ import annotations

from .catcore import compact
from .diagrams import Shape, entry, hmap, row_shape, staircase_shape, vmap


def _quote(s) -> str:
    return '"' + compact(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_grid(d, positions: dict, hedges: dict, vedges: dict, cells, name="diagram") -> str:
    """positions: pos -> object; hedges/vedges: (p, q) -> morphism; cells: top-left positions."""
    H, V = d.hcat, d.vcat
    parent = {p: p for p in positions}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for (p, q), m in list(hedges.items()) + list(vedges.items()):
        cat = H if (p, q) in hedges else V
        if m == cat.ident(positions[p]):
            a, b = find(p), find(q)
            if a != b:
                parent[max(a, b)] = min(a, b)
    nodes = sorted({find(p) for p in positions})
    nid = {p: f"n{k}" for k, p in enumerate(nodes)}
    lines = [f"digraph {_quote(name)} {{", "  node [shape=plaintext];"]
    for p in nodes:
        lines.append(f"  {nid[p]} [label={_quote(positions[p])}];")
    seen = set()
    for edges, style in ((hedges, "solid"), (vedges, "dashed")):
        for (p, q) in sorted(edges):
            a, b = nid[find(p)], nid[find(q)]
            if a == b or (a, b, style) in seen:
                continue
            seen.add((a, b, style))
            lines.append(f"  {a} -> {b} [style={style}, label={_quote(edges[(p, q)])}];")
    for k, c in enumerate(sorted(cells)):
        corner = [c, (c[0], c[1] + 1), (c[0] + 1, c[1]), (c[0] + 1, c[1] + 1)]
        members = " ".join(sorted({nid[find(p)] for p in corner}))
        lines.append(f"  subgraph cluster_sq_{k} {{ label={_quote(f'sq_{k}')}; {members}; }}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_diagram(d, shape: Shape, X, name="diagram") -> str:
    positions = {p: entry(shape, X, p) for p in shape.positions}
    hedges = {(p, q): hmap(shape, X, p) for p, q in shape.hedges}
    vedges = {(p, q): vmap(shape, X, p) for p, q in shape.vedges}
    return export_grid(d, positions, hedges, vedges, shape.cells, name)


def export_square(d, sq, name="square") -> str:
    A, B, C, D = d.corners(sq)
    positions = {(0, 0): A, (0, 1): B, (1, 0): C, (1, 1): D}
    hedges = {((0, 0), (0, 1)): sq[0], ((1, 0), (1, 1)): sq[3]}
    vedges = {((0, 0), (1, 0)): sq[1], ((0, 1), (1, 1)): sq[2]}
    return export_grid(d, positions, hedges, vedges, [(0, 0)], name)


def export_staircase(d, n: int, X, name="staircase") -> str:
    return export_diagram(d, staircase_shape(n), X, name)


def export_ladder(d, n: int, mor, name="ladder") -> str:
    """A morphism (X, Y, comps) of the level-n chain category, drawn as two rows."""
    X, Y, comps = mor
    shape = row_shape(n)
    positions, hedges, vedges = {}, {}, {}
    for r, Z in ((0, X), (1, Y)):
        for c in range(n + 1):
            positions[(r, c)] = entry(shape, Z, (0, c))
        for c in range(n):
            hedges[((r, c), (r, c + 1))] = hmap(shape, Z, (0, c))
    for c in range(n + 1):
        vedges[((0, c), (1, c))] = comps[c]
    return export_grid(d, positions, hedges, vedges, [(0, c) for c in range(n)], name)
