"""Builders for the worked examples: finite sets, partial monoids, twisted
arrows, graphs, intervals, and the path construction on a 2-Segal set."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .catcore import FinCat, build_category, ordered
from .double import CompletionData, FlatDoubleCat, SquaresCat


def _invert(inj):
    return {x: i + 1 for i, x in enumerate(inj)}


# finite sets

def finset_squares(n_max: int) -> SquaresCat:
    """Skeletal finite sets {1..k}, k <= n_max.

    h-mor ``("h", a, b, img)``: an injection [a]→[b] given by its images.
    v-mor ``("v", a, c, img)``: a formal opposite, i.e. an injection [c]→[a].
    Completions put C first and then the complement in increasing order.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    objs = list(range(n_max + 1))
    hm, vm = {}, {}
    for a in objs:
        for b in objs:
            for img in permutations(range(1, b + 1), a):
                hm[("h", a, b, img)] = (a, b)
                vm[("v", b, a, img)] = (b, a)

    def hcomp(g, f):
        return ("h", f[1], g[2], tuple(g[3][i - 1] for i in f[3]))

    def vcomp(w, u):
        # u: A↠C is ι_u: C→A; w: C↠E is ι_w: E→C; composite is ι_u∘ι_w
        return ("v", u[1], w[2], tuple(u[3][i - 1] for i in w[3]))

    hcat = build_category(objs, hm, lambda a: ("h", a, a, tuple(range(1, a + 1))), hcomp, "Inj")
    vcat = build_category(objs, vm, lambda a: ("v", a, a, tuple(range(1, a + 1))), vcomp, "Inj^op")

    sqs = []
    by_src_h: dict = {}
    for f in hm:
        by_src_h.setdefault(f[1], []).append(f)
    for f in hm:
        A, B = f[1], f[2]
        imf = set(f[3])
        for u in vcat.out_of(A):
            C = u[2]
            fu = tuple(f[3][i - 1] for i in u[3])
            for v in vcat.out_of(B):
                D = v[2]
                imv = set(v[3])
                if imf | imv != set(range(1, B + 1)) or imf & imv != set(fu):
                    continue
                for g in hcat.hom(C, D):
                    if tuple(v[3][j - 1] for j in g[3]) == fu:
                        sqs.append((f, u, v, g))
    base = FlatDoubleCat(objs, hcat, vcat, sqs, f"FinSet<={n_max}")
    return SquaresCat(base, 0, _finset_completion(hcat, vcat))


def _finset_completion(hcat, vcat) -> CompletionData:
    def span_complete(f, u):
        B, C = f[2], u[2]
        comp = [x for x in range(1, B + 1) if x not in set(f[3])]
        D = C + len(comp)
        iv = tuple(f[3][u[3][i] - 1] for i in range(C)) + tuple(comp)
        return (f, u, ("v", B, D, iv), ("h", C, D, tuple(range(1, C + 1))))

    def _through(via, target):
        # the injection x with via∘x = target, via injective
        inv = _invert(via)
        return tuple(inv[t] for t in target)

    def span_action(sp1, sp2, abc):
        s1, s2 = span_complete(*sp1), span_complete(*sp2)
        b = abc[1]
        iv1, iv2 = s1[2][3], s2[2][3]
        return ("v", s1[2][2], s2[2][2], _through(iv1, tuple(b[3][i - 1] for i in iv2)))

    def w(sq):
        s0 = span_complete(sq[0], sq[1])
        return ("v", s0[2][2], sq[2][2], _through(s0[2][3], sq[2][3]))

    def cospan_complete(v, g):
        B, C = v[1], g[1]
        comp = [x for x in range(1, B + 1) if x not in set(v[3])]
        A0 = C + len(comp)
        f0 = tuple(v[3][g[3][i] - 1] for i in range(C)) + tuple(comp)
        return (("h", A0, B, f0), ("v", A0, C, tuple(range(1, C + 1))), v, g)

    def cospan_action(cs1, cs2, bcd):
        s1, s2 = cospan_complete(*cs1), cospan_complete(*cs2)
        b = bcd[0]
        f1, f2 = s1[0][3], s2[0][3]
        return ("v", s1[0][1], s2[0][1], _through(f1, tuple(b[3][i - 1] for i in f2)))

    def u(sq):
        s0 = cospan_complete(sq[2], sq[3])
        return ("v", s0[0][1], sq[0][1], _through(s0[0][3], sq[0][3]))

    return CompletionData(span_complete, span_action, w, cospan_complete, cospan_action, u)


# partial monoids and twisted arrows

def _composition_squares(carrier, mul, runit, lunit, name):
    """Squares category witnessing associativity of a partial product.

    h-mor ``("h", a, b)``: a ↣ a*b; v-mor ``("v", a, b)``: a*b ↠ b; the
    square for a triple (c, a, b) has top (c*a, b), left (c, a),
    right (c, a*b) and bottom (a, b).  ``mul`` returns None when undefined.
    """
    carrier = ordered(carrier)
    pairs = [(a, b) for a in carrier for b in carrier if mul(a, b) is not None]
    hm = {("h", a, b): (a, mul(a, b)) for a, b in pairs}
    vm = {("v", a, b): (mul(a, b), b) for a, b in pairs}
    hcat = build_category(carrier, hm, lambda a: ("h", a, runit(a)),
                          lambda g, f: ("h", f[1], mul(f[2], g[2])), name + "-h")
    vcat = build_category(carrier, vm, lambda a: ("v", lunit(a), a),
                          lambda g, f: ("v", mul(f[1], g[1]), g[2]), name + "-v")
    sqs = []
    for c in carrier:
        for a in carrier:
            ca = mul(c, a)
            if ca is None:
                continue
            for b in carrier:
                ab = mul(a, b)
                if ab is None or mul(ca, b) is None:
                    continue
                sqs.append((("h", ca, b), ("v", c, a), ("v", c, ab), ("h", a, b)))
    return FlatDoubleCat(carrier, hcat, vcat, sqs, name)


def partial_monoid_squares(m) -> SquaresCat:
    from .double import search_completions
    r = m.validate()
    if not r.passed:
        raise ValueError("invalid partial monoid: " + "; ".join(r.violations[:3]))
    base = _composition_squares(m.carrier, m.mul, lambda a: m.unit, lambda a: m.unit, "M")
    d = SquaresCat(base, m.unit)
    d.completion = search_completions(d)
    return d


def twisted_arrow_squares(c: FinCat):
    """Objects are morphisms of c; f ↣ (f then g) and (f then g) ↠ g.

    There is no unique unit, so a marked object (an identity) is returned
    alongside the flat double category instead of a basepoint.
    """
    def mul(f, g):
        if c.dst(f) != c.src(g):
            return None
        return c.compose(g, f)

    base = _composition_squares(list(c.morphisms), mul,
                                lambda f: c.ident(c.dst(f)), lambda f: c.ident(c.src(f)),
                                f"Tw({c.name})")
    return base, c.ident(c.objects[0])


def twisted_arrow_category(c: FinCat) -> FinCat:
    """Morphisms f -> g are pairs (u, v) with f = v∘g∘u."""
    mors = {}
    for f, (a, b) in c.morphisms.items():
        for g, (a2, b2) in c.morphisms.items():
            for u in c.hom(a, a2):
                for v in c.hom(b2, b):
                    if c.compose(v, c.compose(g, u)) == f:
                        mors[(f, g, u, v)] = (f, g)
    return build_category(
        list(c.morphisms), mors,
        lambda f: (f, f, c.ident(c.src(f)), c.ident(c.dst(f))),
        lambda y, x: (x[0], y[1], c.compose(y[2], x[2]), c.compose(x[3], y[3])),
        f"tw({c.name})")


# graphs

@dataclass
class GraphData:
    vertices: list
    edges: list  # pairs of vertices

    def __post_init__(self):
        vs = set(self.vertices)
        norm = set()
        for e in self.edges:
            a, b = tuple(e)
            if a not in vs or b not in vs:
                raise ValueError(f"edge {e!r} references a missing vertex")
            if a == b:
                raise ValueError(f"edge {e!r} is a loop")
            norm.add(tuple(ordered((a, b))))
        self.vertices = ordered(vs)
        self.edges = ordered(norm)


def _subgraphs(g: GraphData):
    out = []
    for k in range(len(g.vertices) + 1):
        for vs in combinations(g.vertices, k):
            s = set(vs)
            avail = [e for e in g.edges if e[0] in s and e[1] in s]
            for j in range(len(avail) + 1):
                for es in combinations(avail, j):
                    out.append((tuple(vs), tuple(es)))
    return out


def _full_in(h, k) -> bool:
    """h is a full subgraph of k."""
    vs = set(h[0])
    return vs <= set(k[0]) and set(h[1]) == {e for e in k[1] if e[0] in vs and e[1] in vs}


def graph_squares(variant: int, data) -> SquaresCat:
    """Variant 1: subgraphs of an ambient GraphData; 2/3: graphs on {1..m}, m <= data."""
    if variant == 1:
        return _graph_squares_ambient(data)
    if variant in (2, 3):
        return _graph_squares_labeled(int(data), full=(variant == 2))
    raise ValueError(f"unknown graph variant {variant!r}")


def _graph_squares_ambient(g: GraphData, max_vertices: int = 6) -> SquaresCat:
    from .double import search_completions
    if len(g.vertices) > max_vertices:
        raise ValueError(f"ambient graph has {len(g.vertices)} vertices; "
                         f"the guard allows at most {max_vertices}")
    objs = _subgraphs(g)
    hm, vm = {}, {}
    for h in objs:
        for k in objs:
            if _full_in(h, k):
                hm[("h", h, k)] = (h, k)
                vm[("v", k, h)] = (k, h)
    hcat = build_category(objs, hm, lambda a: ("h", a, a), lambda y, x: ("h", x[1], y[2]), "G-h")
    vcat = build_category(objs, vm, lambda a: ("v", a, a), lambda y, x: ("v", x[1], y[2]), "G-v")
    sqs = []
    for f in hm:
        A, B = f[1], f[2]
        for u in vcat.out_of(A):
            C = u[2]
            for v in vcat.out_of(B):
                D = v[2]
                if (set(B[0]) == set(A[0]) | set(D[0]) and set(C[0]) == set(A[0]) & set(D[0])
                        and ("h", C, D) in hm):
                    sqs.append((f, u, v, ("h", C, D)))
    d = SquaresCat(FlatDoubleCat(objs, hcat, vcat, sqs, "Graphs(G)"), ((), ()))
    d.completion = search_completions(d)
    return d


def _labeled_graphs(m_max):
    out = []
    for m in range(m_max + 1):
        pairs = list(combinations(range(1, m + 1), 2))
        for k in range(len(pairs) + 1):
            for es in combinations(pairs, k):
                out.append((m, es))
    return out


def _image_edges(img, es):
    return {tuple(sorted((img[a - 1], img[b - 1]))) for a, b in es}


def _graph_squares_labeled(m_max: int, full: bool) -> SquaresCat:
    from .double import search_completions
    objs = _labeled_graphs(m_max)
    hm, vm = {}, {}
    for A in objs:
        for B in objs:
            for img in permutations(range(1, B[0] + 1), A[0]):
                im = _image_edges(img, A[1])
                if full:
                    s = set(img)
                    ok = im == {e for e in B[1] if e[0] in s and e[1] in s}
                else:
                    ok = im <= set(B[1])
                if ok:
                    hm[("h", A, B, img)] = (A, B)
                    vm[("v", B, A, img)] = (B, A)

    def hcomp(g, f):
        return ("h", f[1], g[2], tuple(g[3][i - 1] for i in f[3]))

    def vcomp(w, u):
        return ("v", u[1], w[2], tuple(u[3][i - 1] for i in w[3]))

    def ident(k):
        return lambda a: (k, a, a, tuple(range(1, a[0] + 1)))

    hcat = build_category(objs, hm, ident("h"), hcomp, "Gr-h")
    vcat = build_category(objs, vm, ident("v"), vcomp, "Gr-v")
    sqs = []
    for f in hm:
        A, B = f[1], f[2]
        imf = set(f[3])
        ef = _image_edges(f[3], A[1])
        for u in vcat.out_of(A):
            C = u[2]
            fu = tuple(f[3][i - 1] for i in u[3])
            efu = _image_edges(fu, C[1])
            for v in vcat.out_of(B):
                D = v[2]
                imv = set(v[3])
                if imf | imv != set(range(1, B[0] + 1)) or imf & imv != set(fu):
                    continue
                if not full:
                    ev = _image_edges(v[3], D[1])
                    if ef | ev != set(B[1]) or ef & ev != efu:
                        continue
                for g in hcat.hom(C, D):
                    if tuple(v[3][j - 1] for j in g[3]) == fu:
                        sqs.append((f, u, v, g))
    name = f"Graphs{'full' if full else 'sub'}<={m_max}"
    d = SquaresCat(FlatDoubleCat(objs, hcat, vcat, sqs, name), (0, ()))
    d.completion = search_completions(d)
    return d


# intervals

def interval_polytopes(q: int, L: int, reflections: bool = False) -> SquaresCat:
    """Unions of cells [k/q, (k+1)/q] inside [0, L], with translations (and optionally reflections).

    An object is a sorted tuple of cell indices.  A morphism P -> Q is the map
    c -> s*c + k restricted to P, stored as ``(kind, P, Q, s, k)``; on the
    empty polytope it is normalised to the identity.
    """
    from .double import search_completions
    if q < 1 or L < 0:
        raise ValueError("need q >= 1 and L >= 0")
    ncell = q * L
    cells = list(range(ncell))
    objs = [tuple(c) for k in range(ncell + 1) for c in combinations(cells, k)]
    signs = (1, -1) if reflections else (1,)

    def act(s, k, P):
        return tuple(sorted(s * c + k for c in P))

    def maps(P, Q):
        if not P:
            return [(1, 0)]
        out = []
        for s in signs:
            for k in range(-2 * ncell, 2 * ncell + 1):
                if set(act(s, k, P)) <= set(Q):
                    out.append((s, k))
        return out

    hm, vm = {}, {}
    for P in objs:
        for Q in objs:
            for s, k in maps(P, Q):
                hm[("h", P, Q, s, k)] = (P, Q)
                vm[("v", Q, P, s, k)] = (Q, P)

    def norm(kind, A, B, dom, s, k):
        return (kind, A, B, 1, 0) if not dom else (kind, A, B, s, k)

    def hcomp(g, f):
        # g∘f: c -> s2*(s1*c + k1) + k2
        return norm("h", f[1], g[2], f[1], g[3] * f[3], g[3] * f[4] + g[4])

    def vcomp(w, u):
        # u: Q↠P is the map P -> Q; w: P↠P' is P' -> P; composite is P' -> Q
        return norm("v", u[1], w[2], w[2], u[3] * w[3], u[3] * w[4] + u[4])

    hcat = build_category(objs, hm, lambda a: ("h", a, a, 1, 0), hcomp, "P-h")
    vcat = build_category(objs, vm, lambda a: ("v", a, a, 1, 0), vcomp, "P-v")
    sqs = []
    for f in hm:
        P, Q = f[1], f[2]
        g0P = set(act(f[3], f[4], P))
        for u in vcat.out_of(P):
            Q2 = u[2]
            g0g1 = set(act(f[3], f[4], act(u[3], u[4], Q2)))
            for v in vcat.out_of(Q):
                R = v[2]
                g3R = set(act(v[3], v[4], R))
                if g0P | g3R != set(Q) or g0P & g3R != g0g1:
                    continue
                for g in hcat.hom(Q2, R):
                    # commutativity on Q': g3∘g2 = g0∘g1
                    if not Q2 or (v[3] * g[3], v[3] * g[4] + v[4]) == \
                            (f[3] * u[3], f[3] * u[4] + f[4]):
                        sqs.append((f, u, v, g))
    name = f"Intervals(q={q},L={L}{',refl' if reflections else ''})"
    d = SquaresCat(FlatDoubleCat(objs, hcat, vcat, sqs, name), ())
    d.completion = search_completions(d)
    return d


# path construction

def path_double_category(x) -> SquaresCat:
    """Squares category of a reduced 2-Segal set (checked up to level 3).

    Objects are 1-simplices.  A 2-simplex t is an h-mor d2 t ↣ d1 t and a
    v-mor d1 t ↠ d0 t; a 3-simplex s is the square with top d1 s, left d3 s,
    right d2 s and bottom d0 s.
    """
    from .double import search_completions
    from .simplicial import check_segal
    if x.bound < 3:
        raise ValueError(f"path construction needs bound >= 3, got {x.bound}")
    if len(x.levels[0]) != 1:
        raise ValueError(f"input is not reduced: {len(x.levels[0])} vertices")
    seg = check_segal(x.truncate(3), 2)
    if not seg.passed:
        raise ValueError("input fails the 2-Segal check at n=3: " + seg.violations[0])
    F = x.faces
    X1, X2, X3 = x.levels[1], x.levels[2], x.levels[3]
    hm = {("h", t): (F[(2, 2)][t], F[(2, 1)][t]) for t in X2}
    vm = {("v", t): (F[(2, 1)][t], F[(2, 0)][t]) for t in X2}
    hfill = {(F[(3, 3)][s], F[(3, 1)][s]): s for s in X3}
    vfill = {(F[(3, 2)][s], F[(3, 0)][s]): s for s in X3}
    hcat = build_category(X1, hm, lambda c: ("h", x.degens[(1, 1)][c]),
                          lambda g, f: ("h", F[(3, 2)][hfill[(f[1], g[1])]]), "P-h")
    vcat = build_category(X1, vm, lambda c: ("v", x.degens[(1, 0)][c]),
                          lambda g, f: ("v", F[(3, 1)][vfill[(f[1], g[1])]]), "P-v")
    sqs = [(("h", F[(3, 1)][s]), ("v", F[(3, 3)][s]), ("v", F[(3, 2)][s]), ("h", F[(3, 0)][s]))
           for s in X3]
    o = x.degens[(0, 0)][x.levels[0][0]]
    d = SquaresCat(FlatDoubleCat(X1, hcat, vcat, sqs, f"Path({x.name})"), o)
    d.completion = search_completions(d)
    return d


def z2_nerve(N: int = 4):
    from .catcore import group_category
    from .simplicial import nerve
    return nerve(group_category([0, 1], lambda a, b: (a + b) % 2, 0, "Z2"), N)


def pmonoid_1x():
    """The partial monoid {1, x} with x*x undefined."""
    from .simplicial import PartialMonoid
    return PartialMonoid(["1", "x"], "1", {("1", "1"): "1", ("1", "x"): "x", ("x", "1"): "x"})


def single_edge() -> GraphData:
    return GraphData(["a", "b"], [("a", "b")])
