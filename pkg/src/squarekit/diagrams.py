"""Grid-shaped diagrams in a squares category.

A shape is a set of integer positions (row, col).  Horizontal edges join
(r, c) -> (r, c+1), vertical edges join (r, c) -> (r+1, c), and every unit
cell with all four corners present must be a square.  A diagram is stored
canonically as ``(entries, hs, vs)`` in the shape's position/edge order.
Morphisms are vertical natural transformations: one v-mor per position,
mixed faces are squares, all-vertical faces commute.
"""
from __future__ import annotations

from functools import cached_property

from .catcore import FinCat, FunctorData, build_category


class Shape:
    def __init__(self, positions, fixed=()):
        self.positions = tuple(sorted(set(positions)))
        self.fixed = frozenset(fixed)
        P = set(self.positions)
        self.index = {p: k for k, p in enumerate(self.positions)}
        self.hedges = tuple((p, (p[0], p[1] + 1)) for p in self.positions if (p[0], p[1] + 1) in P)
        self.vedges = tuple((p, (p[0] + 1, p[1])) for p in self.positions if (p[0] + 1, p[1]) in P)
        self.hidx = {e[0]: k for k, e in enumerate(self.hedges)}
        self.vidx = {e[0]: k for k, e in enumerate(self.vedges)}

    def __repr__(self):
        return f"Shape({len(self.positions)} positions, fixed={sorted(self.fixed)})"

    @cached_property
    def cells(self):
        P = set(self.positions)
        return [p for p in self.positions
                if {(p[0], p[1] + 1), (p[0] + 1, p[1]), (p[0] + 1, p[1] + 1)} <= P]


def row_shape(n):
    return Shape([(0, c) for c in range(n + 1)])


def staircase_shape(n):
    return Shape([(i, j) for i in range(n + 1) for j in range(i, n + 1)],
                 [(i, i) for i in range(n + 1)])


def tplus_shape(n):
    top = [(-1, c) for c in range(n + 1)]
    return Shape(top + [(i, j) for i in range(n + 1) for j in range(i, n + 1)],
                 [(i, i) for i in range(n + 1)])


def grid_shape(n):
    return Shape([(i, j) for i in range(n + 1) for j in range(n + 1)])


# accessors on canonical diagrams

def entry(shape: Shape, X, p):
    return X[0][shape.index[p]]


def hmap(shape: Shape, X, p):
    return X[1][shape.hidx[p]]


def vmap(shape: Shape, X, p):
    return X[2][shape.vidx[p]]


def row_path(d, shape, X, r, a, b):
    """Composite h-mor from (r, a) to (r, b), a <= b."""
    H = d.hcat
    acc = H.ident(entry(shape, X, (r, a)))
    for c in range(a, b):
        acc = H.compose(hmap(shape, X, (r, c)), acc)
    return acc


def col_path(d, shape, X, c, a, b):
    V = d.vcat
    acc = V.ident(entry(shape, X, (a, c)))
    for r in range(a, b):
        acc = V.compose(vmap(shape, X, (r, c)), acc)
    return acc


def enumerate_diagrams(d, shape: Shape) -> list:
    """All diagrams of the shape, in canonical order."""
    H, V, o = d.hcat, d.vcat, getattr(d, "basepoint", None)
    P = set(shape.positions)
    order = shape.positions  # row-major: left and up neighbours come first
    ents: dict = {}
    hs: dict = {}
    vs: dict = {}
    out = []

    def ok_entry(p, x):
        return p not in shape.fixed or x == o

    def go(k):
        if k == len(order):
            out.append((tuple(ents[p] for p in shape.positions),
                        tuple(hs[e[0]] for e in shape.hedges),
                        tuple(vs[e[0]] for e in shape.vedges)))
            return
        p = order[k]
        r, c = p
        left, up, ul = (r, c - 1), (r - 1, c), (r - 1, c - 1)
        hl, vu = left in P, up in P
        if hl and vu and ul in P:
            # the cell's top/left edges are known; its right/bottom come from a square
            for sq in d.squares_with_span(hs[ul], vs[ul]):
                x = H.dst(sq[3])
                if ok_entry(p, x):
                    hs[left], vs[up], ents[p] = sq[3], sq[2], x
                    go(k + 1)
            hs.pop(left, None), vs.pop(up, None), ents.pop(p, None)
        elif hl and vu:
            for f in H.out_of(ents[left]):
                x = H.dst(f)
                if not ok_entry(p, x):
                    continue
                for u in V.hom(ents[up], x):
                    hs[left], vs[up], ents[p] = f, u, x
                    go(k + 1)
            hs.pop(left, None), vs.pop(up, None), ents.pop(p, None)
        elif hl:
            for f in H.out_of(ents[left]):
                x = H.dst(f)
                if ok_entry(p, x):
                    hs[left], ents[p] = f, x
                    go(k + 1)
            hs.pop(left, None), ents.pop(p, None)
        elif vu:
            for u in V.out_of(ents[up]):
                x = V.dst(u)
                if ok_entry(p, x):
                    vs[up], ents[p] = u, x
                    go(k + 1)
            vs.pop(up, None), ents.pop(p, None)
        else:
            for x in (d.objects if p not in shape.fixed else [o]):
                ents[p] = x
                go(k + 1)
            ents.pop(p, None)

    go(0)
    return out


def diagram_morphisms(d, shape: Shape, X, Y) -> list:
    """All vertical natural transformations X => Y, as component tuples."""
    V = d.vcat
    P = set(shape.positions)
    comps: dict = {}
    out = []
    order = shape.positions

    def go(k):
        if k == len(order):
            out.append(tuple(comps[p] for p in order))
            return
        p = order[k]
        r, c = p
        for t in V.hom(entry(shape, X, p), entry(shape, Y, p)):
            left, up = (r, c - 1), (r - 1, c)
            if left in P and not d.is_square(hmap(shape, X, left), comps[left], t,
                                             hmap(shape, Y, left)):
                continue
            if up in P and V.compose(vmap(shape, Y, up), comps[up]) != V.compose(t, vmap(shape, X, up)):
                continue
            comps[p] = t
            go(k + 1)
        comps.pop(p, None)

    go(0)
    return out


def reindex(d, src: Shape, dst: Shape, X, posmap):
    """Pull a diagram back along ``posmap``: dst position -> src position.

    Edges become composites along rows/columns of the source; ``posmap`` must
    be monotone in each coordinate and send rows to rows, columns to columns.
    """
    ents = tuple(entry(src, X, posmap(p)) for p in dst.positions)
    hs = []
    for p, q in dst.hedges:
        a, b = posmap(p), posmap(q)
        hs.append(row_path(d, src, X, a[0], a[1], b[1]))
    vs = []
    for p, q in dst.vedges:
        a, b = posmap(p), posmap(q)
        vs.append(col_path(d, src, X, a[1], a[0], b[0]))
    return (ents, tuple(hs), tuple(vs))


def reindex_morphism(src: Shape, dst: Shape, comps, posmap):
    return tuple(comps[src.index[posmap(p)]] for p in dst.positions)


def diagram_category(d, shape: Shape, name: str = "", objects=None) -> FinCat:
    """The category of diagrams of the shape and vertical natural transformations."""
    V = d.vcat
    objs = enumerate_diagrams(d, shape) if objects is None else objects
    mors = {}
    for X in objs:
        for Y in objs:
            for c in diagram_morphisms(d, shape, X, Y):
                mors[(X, Y, c)] = (X, Y)
    return build_category(
        objs, mors,
        lambda X: (X, X, tuple(V.ident(x) for x in X[0])),
        lambda g, f: (f[0], g[1], tuple(V.compose(b, a) for a, b in zip(f[2], g[2]))),
        name,
    )


def reindex_functor(d, src: Shape, dst: Shape, C: FinCat, D: FinCat, posmap, name="") -> FunctorData:
    om = {X: reindex(d, src, dst, X, posmap) for X in C.objects}
    mm = {m: (om[m[0]], om[m[1]], reindex_morphism(src, dst, m[2], posmap)) for m in C.morphisms}
    return FunctorData(C, D, om, mm, name)


def coface(n, i):
    """delta_i: [n-1] -> [n], skipping i."""
    return lambda k: k if k < i else k + 1


def codegeneracy(n, i):
    """sigma_i: [n+1] -> [n], hitting i twice."""
    return lambda k: k if k <= i else k - 1


def is_diagram_morphism(d, shape: Shape, X, Y, comps) -> bool:
    V = d.vcat
    for p, t in zip(shape.positions, comps):
        if V.morphisms.get(t) != (entry(shape, X, p), entry(shape, Y, p)):
            return False
    c = dict(zip(shape.positions, comps))
    for p, q in shape.hedges:
        if not d.is_square(hmap(shape, X, p), c[p], c[q], hmap(shape, Y, p)):
            return False
    for p, q in shape.vedges:
        if V.compose(vmap(shape, Y, p), c[p]) != V.compose(c[q], vmap(shape, X, p)):
            return False
    return True
