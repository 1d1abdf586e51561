"""Nerve-style constructions on squares categories and the comparison maps
between them.

Levels are categories of grid diagrams (see ``diagrams``); faces delete a
row/column and compose, degeneracies repeat one with identities.
"""
from __future__ import annotations

from dataclasses import dataclass

from .catcore import (FinCat, FunctorData, Report, build_category, check_functor_equivalence)
from .diagrams import (Shape, codegeneracy, coface, diagram_category, diagram_morphisms,
                       entry, enumerate_diagrams, grid_shape, hmap,
                       reindex, reindex_functor, row_shape,
                       staircase_shape, tplus_shape, vmap)
from .double import CompletionData, SquaresCat, weak_equivalences
from .simplicial import TruncSCat, TruncSSet


def _both(theta):
    return lambda p: (theta(p[0]), theta(p[1]))


def _cols(theta):
    return lambda p: (p[0], theta(p[1]))


def _top_fixed(theta):
    return lambda p: (p[0] if p[0] < 0 else theta(p[0]), theta(p[1]))


def _simplicial_category(d, N, shape_fn, lift, name) -> TruncSCat:
    shapes = [shape_fn(n) for n in range(N + 1)]
    levels = [diagram_category(d, shapes[n], f"{name}_{n}") for n in range(N + 1)]
    faces, degens = {}, {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            faces[(n, i)] = reindex_functor(d, shapes[n], shapes[n - 1], levels[n],
                                            levels[n - 1], lift(coface(n, i)), f"d{i}")
    for n in range(N):
        for i in range(n + 1):
            degens[(n, i)] = reindex_functor(d, shapes[n], shapes[n + 1], levels[n],
                                             levels[n + 1], lift(codegeneracy(n, i)), f"s{i}")
    return TruncSCat(N, levels, faces, degens, f"{name}({d.name})")


def _simplicial_set(d, N, shape_fn, lift, name) -> TruncSSet:
    shapes = [shape_fn(n) for n in range(N + 1)]
    levels = [enumerate_diagrams(d, shapes[n]) for n in range(N + 1)]

    def face(n, i, X):
        return reindex(d, shapes[n], shapes[n - 1], X, lift(coface(n, i)))

    def degen(n, i, X):
        return reindex(d, shapes[n], shapes[n + 1], X, lift(codegeneracy(n, i)))

    return TruncSSet.from_functions(N, levels, face, degen, f"{name}({d.name})")


def t_simplicial(d: SquaresCat, N: int = 4) -> TruncSCat:
    """Level n: chains of n composable h-mors, with ladders of squares as morphisms."""
    return _simplicial_category(d, N, row_shape, _cols, "T")


def s_simplicial(d: SquaresCat, N: int = 4) -> TruncSCat:
    """Level n: staircases with O on the diagonal; morphisms are vertical transformations."""
    return _simplicial_category(d, N, staircase_shape, _both, "S")


def t_plus_simplicial(d: SquaresCat, N: int = 4) -> TruncSCat:
    return _simplicial_category(d, N, tplus_shape, _top_fixed, "T+")


def t_plus_level(d: SquaresCat, n: int) -> FinCat:
    """A top h-chain pasted onto a staircase, vertical transformations as morphisms."""
    return diagram_category(d, tplus_shape(n), f"T+_{n}")


def ob_s(d: SquaresCat, N: int = 4) -> TruncSSet:
    """Objects of the S-construction with the induced faces and degeneracies."""
    return _simplicial_set(d, N, staircase_shape, _both, "obS")


def double_nerve_diag(d, N: int = 4) -> TruncSSet:
    """Diagonal of the double nerve: level n holds n-by-n grids of pasted squares.

    Vertex i of an n-simplex sits at grid position (i, n - i), so the
    horizontal direction is read backwards: a 1-simplex is a square running
    from its top-right corner to its bottom-left corner.
    """
    shapes = [grid_shape(n) for n in range(N + 1)]
    levels = [enumerate_diagrams(d, shapes[n]) for n in range(N + 1)]

    def lift(theta, m, n):
        # theta: [m] -> [n]; rows pull back along theta, columns along its mirror
        return lambda p: (theta(p[0]), n - theta(m - p[1]))

    def face(n, i, X):
        return reindex(d, shapes[n], shapes[n - 1], X, lift(coface(n, i), n - 1, n))

    def degen(n, i, X):
        return reindex(d, shapes[n], shapes[n + 1], X, lift(codegeneracy(n, i), n + 1, n))

    return TruncSSet.from_functions(N, levels, face, degen, f"diagN({d.name})")


def staircase_objects(d: SquaresCat, n: int) -> list:
    return enumerate_diagrams(d, staircase_shape(n))


def strict_segal_comparison(sc: TruncSCat, n: int):
    """The map T_n -> T_1 x_{T_0} ... x_{T_0} T_1 on objects and morphisms.

    Returns ``(bijective_on_objects, bijective_on_morphisms, details)``.  The
    iterated fibre product is built directly from T_1 and T_0.
    """
    spine = [sc.restriction(n, (k - 1, k)) for k in range(1, n + 1)]
    T1 = sc.levels[1]
    d0, d1 = sc.faces[(1, 0)], sc.faces[(1, 1)]

    def fibre(cells, src_of, dst_of):
        out = [(x,) for x in cells]
        for _ in range(n - 1):
            out = [t + (y,) for t in out for y in cells if dst_of(t[-1]) == src_of(y)]
        return set(out)

    obj_target = fibre(T1.objects, d1.obj_map.__getitem__, d0.obj_map.__getitem__)
    mor_target = fibre(T1.morphisms, d1.mor_map.__getitem__, d0.mor_map.__getitem__)
    X = sc.levels[n]
    obj_img = [tuple(F.obj_map[a] for F in spine) for a in X.objects]
    mor_img = [tuple(F.mor_map[m] for F in spine) for m in X.morphisms]
    ob_ok = len(set(obj_img)) == len(obj_img) and set(obj_img) == obj_target
    mor_ok = len(set(mor_img)) == len(mor_img) and set(mor_img) == mor_target
    det = (f"n={n}: {len(X.objects)} objects vs {len(obj_target)} in the fibre product, "
           f"{len(X.morphisms)} morphisms vs {len(mor_target)}")
    return ob_ok, mor_ok, det


def check_strict_1segal(sc: TruncSCat, levels=(2, 3)) -> Report:
    """Strict isomorphisms T_n = T_1 x_{T_0} ... x_{T_0} T_1 of categories."""
    v, det = [], []
    for n in levels:
        ob_ok, mor_ok, s = strict_segal_comparison(sc, n)
        det.append(s)
        if not ob_ok:
            v.append(f"n={n}: not bijective on objects")
        if not mor_ok:
            v.append(f"n={n}: not bijective on morphisms")
    return Report("strict 1-Segal in Cat", not v, v, det)


# H and V

def h_shape(n):
    return Shape([(0, c) for c in range(n + 1)], [(0, 0)])


def v_shape(n):
    return Shape([(r, 0) for r in range(n + 1)], [(n, 0)])


def _weq_category(d, shape, name, vweq) -> FinCat:
    V = d.vcat
    objs = enumerate_diagrams(d, shape)
    mors = {}
    for X in objs:
        for Y in objs:
            for c in diagram_morphisms(d, shape, X, Y):
                if all(t in vweq for t in c):
                    mors[(X, Y, c)] = (X, Y)
    return build_category(
        objs, mors,
        lambda X: (X, X, tuple(V.ident(x) for x in X[0])),
        lambda g, f: (f[0], g[1], tuple(V.compose(b, a) for a, b in zip(f[2], g[2]))),
        name,
    )


class IncompleteData(Exception):
    pass


def _need(x, what):
    if x is None:
        raise IncompleteData(what)
    return x


@dataclass
class HVLevel:
    category: FinCat
    shape: Shape
    direction: str
    n: int


def hv_level(d: SquaresCat, comp: CompletionData | None, n: int, direction: str = "H") -> HVLevel:
    """H_n: O↣A_1↣...↣A_n; V_n: A_1↠...↠A_n↠O; morphisms pointwise weak equivalences."""
    if direction not in ("H", "V"):
        raise ValueError("direction must be 'H' or 'V'")
    vweq = weak_equivalences(d).vweq
    shape = h_shape(n) if direction == "H" else v_shape(n)
    return HVLevel(_weq_category(d, shape, f"{direction}_{n}", vweq), shape, direction, n)


def h_face0(d: SquaresCat, comp: CompletionData, X, n):
    """Modified d_0 on an H_n object: complete spans left to right, starting from O."""
    sh = h_shape(n)
    o = d.basepoint
    B = [o]          # B_0 = O
    down = []        # verticals A_k ↠ B_{k-1}
    hs = []
    prev_v = d.zero_v(entry(sh, X, (0, 1))) if n >= 1 else None
    for k in range(1, n):
        f = hmap(sh, X, (0, k))
        sq = _need(comp.span_complete(f, prev_v), f"span {(f, prev_v)!r} has no completion")
        down.append(prev_v)
        hs.append(sq[3])
        B.append(d.hcat.dst(sq[3]))
        prev_v = sq[2]
    ents = tuple(B)
    return (ents, tuple(hs), ()), down


def h_face0_morphism(d, comp, X, Y, comps, n):
    """Induced map on modified d_0 via the span action."""
    sh = h_shape(n)
    BX, downX = h_face0(d, comp, X, n)
    BY, downY = h_face0(d, comp, Y, n)
    V = d.vcat
    out = [V.ident(d.basepoint)]
    for k in range(1, n):
        spx = (hmap(sh, X, (0, k)), downX[k - 1])
        spy = (hmap(sh, Y, (0, k)), downY[k - 1])
        m = (comps[k], comps[k + 1], out[k - 1])
        out.append(_need(comp.span_action(spx, spy, m), f"span morphism {m!r} has no induced map"))
    return BX, BY, tuple(out)


def v_facen(d: SquaresCat, comp: CompletionData, X, n):
    """Modified d_n on a V_n object: complete cospans bottom to top, starting from O."""
    sh = v_shape(n)
    o = d.basepoint
    if n == 1:
        return ((o,), (), ()), []
    B = [None] * n
    B[n - 1] = o
    g = d.zero_h(entry(sh, X, (n - 1, 0)))
    tops = [None] * n     # h-mor B_r ↣ C_r
    tops[n - 1] = g
    vs = [None] * (n - 1)
    for r in range(n - 2, -1, -1):
        v = vmap(sh, X, (r, 0))
        sq = _need(comp.cospan_complete(v, tops[r + 1]),
                   f"cospan {(v, tops[r + 1])!r} has no completion")
        tops[r] = sq[0]
        vs[r] = sq[1]
        B[r] = d.hcat.src(sq[0])
    return (tuple(B), (), tuple(vs)), tops


def v_facen_morphism(d, comp, X, Y, comps, n):
    sh = v_shape(n)
    BX, topsX = v_facen(d, comp, X, n)
    BY, topsY = v_facen(d, comp, Y, n)
    V = d.vcat
    out = [None] * n
    out[n - 1] = V.ident(d.basepoint)
    for r in range(n - 2, -1, -1):
        csx = (vmap(sh, X, (r, 0)), topsX[r + 1])
        csy = (vmap(sh, Y, (r, 0)), topsY[r + 1])
        m = (comps[r], out[r + 1], comps[r + 1])
        out[r] = _need(comp.cospan_action(csx, csy, m), f"cospan morphism {m!r} has no induced map")
    return BX, BY, tuple(out)


def hv_face(d: SquaresCat, comp: CompletionData, lvl: HVLevel, lower: HVLevel) -> FunctorData:
    """The modified face (d_0 for H, d_n for V) as a functor between levels."""
    n = lvl.n
    C = lvl.category
    om, mm = {}, {}
    for X in C.objects:
        om[X] = (h_face0 if lvl.direction == "H" else v_facen)(d, comp, X, n)[0]
    for m in C.morphisms:
        X, Y, c = m
        fn = h_face0_morphism if lvl.direction == "H" else v_facen_morphism
        BX, BY, cc = fn(d, comp, X, Y, c, n)
        mm[m] = (BX, BY, cc)
    return FunctorData(C, lower.category, om, mm, "d0" if lvl.direction == "H" else f"d{n}")


def forgetful_functor(d: SquaresCat, n: int, target: str, S: FinCat | None = None,
                      Hn: HVLevel | None = None) -> FunctorData:
    """S□_n -> H_n (top row) or S□_n -> V_n (rightmost column)."""
    S = S or diagram_category(d, staircase_shape(n), f"S_{n}")
    Hn = Hn or hv_level(d, None, n, target)
    if target == "H":
        pm = lambda p: (0, p[1])
    else:
        pm = lambda p: (p[0], n)
    return reindex_functor(d, staircase_shape(n), Hn.shape, S, Hn.category, pm, f"U_{target}")


def forgetful_equivalence(d: SquaresCat, comp: CompletionData | None, n: int,
                          target: str = "H") -> Report:
    title = f"forgetful functor S_{n} -> {target}_{n}"
    S = diagram_category(d, staircase_shape(n), f"S_{n}")
    Hn = hv_level(d, comp, n, target)
    U = forgetful_functor(d, n, target, S, Hn)
    fv = U.validate()
    if not fv.passed:
        return Report(title, False, fv.violations[:10])
    rep = check_functor_equivalence(U)
    det = [rep.text().splitlines()[0],
           f"{len(S.objects)} staircases, {len(Hn.category.objects)} objects in {target}_{n}"]
    return Report(title, rep.equivalence, list(rep.witnesses) if not rep.equivalence else [], det)


# comparison witnesses

def _tplus_section_object(d, comp, chain, n):
    """F_n on a T_n object: complete spans row by row under the chain."""
    sh = tplus_shape(n)
    rs = row_shape(n)
    o = d.basepoint
    ents, hs, vs = {}, {}, {}
    for c in range(n + 1):
        ents[(-1, c)] = entry(rs, chain, (0, c))
        if c < n:
            hs[(-1, c)] = hmap(rs, chain, (0, c))
    for p in sh.positions:
        if p[0] < 0:
            continue
        r, c = p
        up, left, ul = (r - 1, c), (r, c - 1), (r - 1, c - 1)
        if p in sh.fixed:
            ents[p] = o
            vs[up] = d.zero_v(ents[up])
            continue
        span = (hs[ul], vs[ul])
        sq = _need(comp.span_complete(*span), f"span {span!r} has no completion")
        ents[p] = d.hcat.dst(sq[3])
        vs[up] = sq[2]
        hs[left] = sq[3]
    return (tuple(ents[p] for p in sh.positions), tuple(hs[e[0]] for e in sh.hedges),
            tuple(vs[e[0]] for e in sh.vedges))


def _tplus_section_morphism(d, comp, X, Y, comps_top, n):
    """F_n on a ladder: induced maps from the span action, identities on O."""
    sh = tplus_shape(n)
    V = d.vcat
    c: dict = {}
    for k in range(n + 1):
        c[(-1, k)] = comps_top[k]
    for p in sh.positions:
        if p[0] < 0:
            continue
        if p in sh.fixed:
            c[p] = V.ident(d.basepoint)
            continue
        r, k = p
        ul, up, left = (r - 1, k - 1), (r - 1, k), (r, k - 1)
        spx = (hmap(sh, X, ul), vmap(sh, X, ul))
        spy = (hmap(sh, Y, ul), vmap(sh, Y, ul))
        m = (c[ul], c[up], c[left])
        c[p] = _need(comp.span_action(spx, spy, m), f"span morphism {m!r} has no induced map")
    return tuple(c[p] for p in sh.positions)


def _tau_component(d, comp, FUX, X, n):
    """tau_X: F U X -> X, built position by position from the span action and w."""
    sh = tplus_shape(n)
    V = d.vcat
    c: dict = {}
    for p in sh.positions:
        if p[0] < 0:
            c[p] = V.ident(entry(sh, X, p))
            continue
        if p in sh.fixed:
            c[p] = V.ident(d.basepoint)
            continue
        r, k = p
        ul, up, left = (r - 1, k - 1), (r - 1, k), (r, k - 1)
        sp_f = (hmap(sh, FUX, ul), vmap(sh, FUX, ul))
        sp_x = (hmap(sh, X, ul), vmap(sh, X, ul))
        m = (c[ul], c[up], c[left])
        ind = _need(comp.span_action(sp_f, sp_x, m), f"span morphism {m!r} has no induced map")
        sq_x = (hmap(sh, X, ul), vmap(sh, X, ul), vmap(sh, X, up), hmap(sh, X, left))
        w = _need(comp.w(sq_x), f"square {sq_x!r} has no w component")
        c[p] = V.compose(w, ind)
    return tuple(c[p] for p in sh.positions)


@dataclass
class ComparisonData:
    U: FunctorData
    F: FunctorData
    tau: dict       # T+ object -> morphism F U X -> X
    U2: FunctorData
    F2: FunctorData
    tau2: dict      # T+ object -> morphism X -> F' U' X


def build_comparison(d: SquaresCat, comp: CompletionData, n: int) -> ComparisonData:
    V = d.vcat
    shp, shr, shs = tplus_shape(n), row_shape(n), staircase_shape(n)
    Tp = diagram_category(d, shp, f"T+_{n}")
    T = diagram_category(d, shr, f"T_{n}")
    S = diagram_category(d, shs, f"S_{n}")
    U = reindex_functor(d, shp, shr, Tp, T, lambda p: (-1, p[1]), "U")
    Fo = {X: _tplus_section_object(d, comp, X, n) for X in T.objects}
    Fm = {m: (Fo[m[0]], Fo[m[1]], _tplus_section_morphism(d, comp, Fo[m[0]], Fo[m[1]], m[2], n))
          for m in T.morphisms}
    F = FunctorData(T, Tp, Fo, Fm, "F")
    tau = {}
    for X in Tp.objects:
        FUX = Fo[U.obj_map[X]]
        tau[X] = (FUX, X, _tau_component(d, comp, FUX, X, n))
    U2 = reindex_functor(d, shp, shs, Tp, S, lambda p: p, "U'")

    def f2_obj(Y):
        ents = tuple(entry(shs, Y, (0, p[1])) if p[0] < 0 else entry(shs, Y, p) for p in shp.positions)
        hs = tuple(hmap(shs, Y, (0, p[1])) if p[0] < 0 else hmap(shs, Y, p) for p, _ in shp.hedges)
        vs = tuple(V.ident(entry(shs, Y, (0, p[1]))) if p[0] < 0 else vmap(shs, Y, p)
                   for p, _ in shp.vedges)
        return (ents, hs, vs)

    F2o = {Y: f2_obj(Y) for Y in S.objects}
    F2m = {m: (F2o[m[0]], F2o[m[1]],
               tuple(m[2][shs.index[(0, p[1])]] if p[0] < 0 else m[2][shs.index[p]]
                     for p in shp.positions))
           for m in S.morphisms}
    F2 = FunctorData(S, Tp, F2o, F2m, "F'")
    tau2 = {}
    for X in Tp.objects:
        comps = tuple(vmap(shp, X, p) if p[0] < 0 else V.ident(entry(shp, X, p))
                      for p in shp.positions)
        tau2[X] = (X, F2o[U2.obj_map[X]], comps)
    return ComparisonData(U, F, tau, U2, F2, tau2)


def comparison_witnesses(d: SquaresCat, comp: CompletionData | None, n: int) -> Report:
    """Sections and transformations for T+_n -> T_n and T+_n -> S□_n, all checked."""
    comp = comp or d.completion
    title = f"comparison witnesses at n={n}"
    if comp is None:
        return Report(title, False, incomplete="no completion data supplied")
    try:
        cd = build_comparison(d, comp, n)
    except IncompleteData as e:
        return Report(title, False, incomplete=str(e))
    v, det = [], []
    Tp, T, S = cd.U.source, cd.U.target, cd.U2.target
    det.append(f"T+_{n}: {len(Tp.objects)} objects, {len(Tp.morphisms)} morphisms; "
               f"T_{n}: {len(T.objects)}/{len(T.morphisms)}; S_{n}: {len(S.objects)}/{len(S.morphisms)}")
    for F in (cd.U, cd.F, cd.U2, cd.F2):
        r = F.validate()
        v.extend(f"{F.name}: {x}" for x in r.violations[:5])
    if v:
        return Report(title, False, v, det)
    # U F = id and U' F' = id
    for name, U, F, C in (("U F", cd.U, cd.F, T), ("U' F'", cd.U2, cd.F2, S)):
        bad = [a for a in C.objects if U.obj_map[F.obj_map[a]] != a]
        bad += [m for m in C.morphisms if U.mor_map[F.mor_map[m]] != m]
        if bad:
            v.append(f"{name} is not the identity, e.g. at {bad[0]!r}")
    # tau: F U => id
    for name, tau, src_of, dst_of in (
            ("tau", cd.tau, lambda m: cd.F.mor_map[cd.U.mor_map[m]], lambda m: m),
            ("tau'", cd.tau2, lambda m: m, lambda m: cd.F2.mor_map[cd.U2.mor_map[m]])):
        for X, t in tau.items():
            if t not in Tp.morphisms:
                v.append(f"{name} component at {X!r} is not a morphism of T+_{n}")
                break
        else:
            for m in Tp.morphisms:
                X, Y, _ = m
                lhs = Tp.compose(dst_of(m), tau[X])
                rhs = Tp.compose(tau[Y], src_of(m))
                if lhs != rhs:
                    v.append(f"{name} is not natural at {m!r}")
                    break
    ids = sum(1 for X, t in cd.tau.items() if t[0] == t[1] and t == Tp.ident(X))
    det.append(f"tau components that are identities: {ids} of {len(cd.tau)}")
    return Report(title, not v, v, det)
