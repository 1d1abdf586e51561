"""Truncated simplicial sets and simplicial categories.

Structure maps are stored as explicit dictionaries:
``faces[(n, i)]`` is d_i: X_n -> X_{n-1} and ``degens[(n, i)]`` is
s_i: X_n -> X_{n+1}.  Everything is checked only up to the bound N, and the
reports say so.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .catcore import (FinCat, FunctorData, Report, check_functor_equivalence,
                      compose_functors, is_groupoid, ordered, pseudo_pullback,
                      validate_category)


class TruncSSet:
    def __init__(self, bound: int, levels, faces: dict, degens: dict, name: str = ""):
        self.bound = bound
        self.levels = [ordered(set(l)) for l in levels]
        self.faces = faces
        self.degens = degens
        self.name = name

    def __repr__(self):
        return f"TruncSSet({self.name or '?'}, sizes={self.sizes()})"

    def sizes(self) -> list[int]:
        return [len(l) for l in self.levels]

    @classmethod
    def from_functions(cls, bound, levels, face: Callable, degen: Callable, name=""):
        """Tabulate ``face(n, i, x)`` and ``degen(n, i, x)`` over the given levels."""
        faces, degens = {}, {}
        for n in range(1, bound + 1):
            for i in range(n + 1):
                faces[(n, i)] = {x: face(n, i, x) for x in levels[n]}
        for n in range(bound):
            for i in range(n + 1):
                degens[(n, i)] = {x: degen(n, i, x) for x in levels[n]}
        return cls(bound, levels, faces, degens, name)

    def face(self, n, i, x):
        return self.faces[(n, i)][x]

    def degen(self, n, i, x):
        return self.degens[(n, i)][x]

    def restrict(self, x, n, verts) -> object:
        """Restriction of an n-simplex to the sorted vertex subset ``verts``."""
        keep = set(verts)
        m = n
        for k in range(n, -1, -1):
            if k not in keep:
                x = self.faces[(m, k)][x]
                m -= 1
        return x

    def truncate(self, bound: int) -> "TruncSSet":
        return TruncSSet(bound, self.levels[:bound + 1],
                         {k: v for k, v in self.faces.items() if k[0] <= bound},
                         {k: v for k, v in self.degens.items() if k[0] < bound}, self.name)


def _simplicial_violations(bound, levels, face, degen, eq=lambda a, b: a == b) -> list[str]:
    """Check all simplicial identities that stay within the bound.

    ``face(n, i)``/``degen(n, i)`` return callables on simplices (or None when
    a map is missing).
    """
    v = []
    for n in range(2, bound + 1):
        for j in range(n + 1):
            for i in range(j):
                # d_i d_j = d_{j-1} d_i
                for x in levels[n]:
                    if not eq(face(n - 1, i)(face(n, j)(x)), face(n - 1, j - 1)(face(n, i)(x))):
                        v.append(f"level {n}: d_{i} d_{j} != d_{j - 1} d_{i} at {x!r}")
                        break
    for n in range(0, bound):
        for j in range(n + 1):
            for i in range(n + 2):
                for x in levels[n]:
                    y = face(n + 1, i)(degen(n, j)(x))
                    if i < j:
                        z = degen(n - 1, j - 1)(face(n, i)(x))
                        rel = f"d_{i} s_{j} != s_{j - 1} d_{i}"
                    elif i in (j, j + 1):
                        z = x
                        rel = f"d_{i} s_{j} != id"
                    else:
                        z = degen(n - 1, j)(face(n, i - 1)(x))
                        rel = f"d_{i} s_{j} != s_{j} d_{i - 1}"
                    if not eq(y, z):
                        v.append(f"level {n}: {rel} at {x!r}")
                        break
    for n in range(0, bound - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                for x in levels[n]:
                    if not eq(degen(n + 1, i)(degen(n, j)(x)), degen(n + 1, j + 1)(degen(n, i)(x))):
                        v.append(f"level {n}: s_{i} s_{j} != s_{j + 1} s_{i} at {x!r}")
                        break
    return v


def _validate_sset(x: TruncSSet) -> Report:
    v = []
    if len(x.levels) != x.bound + 1:
        return Report("simplicial set", False, [f"expected {x.bound + 1} levels, got {len(x.levels)}"])
    sets = [set(l) for l in x.levels]
    for n in range(1, x.bound + 1):
        for i in range(n + 1):
            m = x.faces.get((n, i))
            if m is None:
                v.append(f"missing d_{i} on level {n}")
            elif set(m) != sets[n] or not set(m.values()) <= sets[n - 1]:
                v.append(f"d_{i} on level {n} is not a map X_{n} -> X_{n - 1}")
    for n in range(x.bound):
        for i in range(n + 1):
            m = x.degens.get((n, i))
            if m is None:
                v.append(f"missing s_{i} on level {n}")
            elif set(m) != sets[n] or not set(m.values()) <= sets[n + 1]:
                v.append(f"s_{i} on level {n} is not a map X_{n} -> X_{n + 1}")
    if not v:
        v = _simplicial_violations(x.bound, x.levels,
                                   lambda n, i: x.faces[(n, i)].__getitem__,
                                   lambda n, i: x.degens[(n, i)].__getitem__)
    return Report(f"simplicial set (verified up to level {x.bound})", not v, v,
                  [f"level sizes {x.sizes()}"])


@dataclass
class TruncSCat:
    bound: int
    levels: list  # FinCat per level
    faces: dict = field(default_factory=dict)  # (n, i) -> FunctorData
    degens: dict = field(default_factory=dict)
    name: str = ""

    def __repr__(self):
        return (f"TruncSCat({self.name or '?'}, objects={[len(c.objects) for c in self.levels]}, "
                f"morphisms={[len(c.morphisms) for c in self.levels]})")

    def restriction(self, n, verts) -> FunctorData:
        """Composite of face functors restricting level n to the vertex subset ``verts``."""
        keep = set(verts)
        F = None
        m = n
        for k in range(n, -1, -1):
            if k not in keep:
                G = self.faces[(m, k)]
                F = G if F is None else compose_functors(G, F)
                m -= 1
        if F is None:
            c = self.levels[n]
            F = FunctorData(c, c, {a: a for a in c.objects}, {f: f for f in c.morphisms}, "id")
        return F

    def objects_sset(self) -> TruncSSet:
        return TruncSSet(self.bound, [c.objects for c in self.levels],
                         {k: dict(F.obj_map) for k, F in self.faces.items()},
                         {k: dict(F.obj_map) for k, F in self.degens.items()}, self.name)


def _validate_scat(x: TruncSCat) -> Report:
    v = []
    for n, c in enumerate(x.levels):
        r = validate_category(c)
        v.extend(f"level {n}: {m}" for m in r.violations)
    for k, F in list(x.faces.items()) + list(x.degens.items()):
        r = F.validate()
        v.extend(f"structure functor {k}: {m}" for m in r.violations)
    if not v:
        # identities as strict functor equalities: check on objects and morphisms
        cells = [list(c.objects) + list(c.morphisms) for c in x.levels]
        v = _simplicial_violations(x.bound, cells,
                                   lambda n, i: x.faces[(n, i)].__call__,
                                   lambda n, i: x.degens[(n, i)].__call__)
    return Report(f"simplicial category (verified up to level {x.bound})", not v, v)


def validate_truncated(x) -> Report:
    if isinstance(x, TruncSCat):
        return _validate_scat(x)
    return _validate_sset(x)


# nerves

def nerve(c: FinCat, N: int = 4) -> TruncSSet:
    """Level 0: objects; level n >= 1: tuples (f1, ..., fn) with f1 applied first."""
    levels = [list(c.objects)]
    chains = [(f,) for f in ordered(c.morphisms)]
    if N >= 1:
        levels.append(chains)
    for n in range(2, N + 1):
        chains = [ch + (g,) for ch in chains for g in c.out_of(c.dst(ch[-1]))]
        levels.append(chains)

    def vert(ch, k):
        return c.src(ch[0]) if k == 0 else c.dst(ch[k - 1])

    def face(n, i, ch):
        if n == 1:
            return c.dst(ch[0]) if i == 0 else c.src(ch[0])
        if i == 0:
            return ch[1:]
        if i == n:
            return ch[:-1]
        return ch[:i - 1] + (c.compose(ch[i], ch[i - 1]),) + ch[i + 1:]

    def degen(n, i, ch):
        if n == 0:
            return (c.ident(ch),)
        return ch[:i] + (c.ident(vert(ch, i)),) + ch[i:]

    return TruncSSet.from_functions(N, levels, face, degen, f"N({c.name})")


@dataclass
class PartialMonoid:
    carrier: list
    unit: object
    table: dict  # (a, b) -> a*b on the defined pairs

    def mul(self, a, b):
        return self.table.get((a, b))

    def defined(self, a, b) -> bool:
        return (a, b) in self.table

    def validate(self) -> Report:
        v = []
        car = set(self.carrier)
        if self.unit not in car:
            v.append(f"unit {self.unit!r} not in carrier")
        for (a, b), ab in self.table.items():
            if a not in car or b not in car or ab not in car:
                v.append(f"product ({a!r},{b!r}) = {ab!r} leaves the carrier")
        for m in ordered(car):
            if self.table.get((self.unit, m)) != m or self.table.get((m, self.unit)) != m:
                v.append(f"unit law fails at {m!r}")
        if not v:
            for a in ordered(car):
                for b in ordered(car):
                    for c in ordered(car):
                        ab, bc = self.mul(a, b), self.mul(b, c)
                        left = ab is not None and self.defined(ab, c)
                        right = bc is not None and self.defined(a, bc)
                        if left != right:
                            v.append(f"associativity: exactly one of ({a!r}{b!r}){c!r} and "
                                     f"{a!r}({b!r}{c!r}) is defined")
                        elif left and self.mul(ab, c) != self.mul(a, bc):
                            v.append(f"associativity fails at ({a!r},{b!r},{c!r})")
        return Report("partial monoid", not v, v)


def nerve_partial_monoid(m: PartialMonoid, N: int = 4) -> TruncSSet:
    """Level k: tuples whose left-to-right partial products are all defined."""
    levels = [[()]]
    tuples = [((x,), x) for x in ordered(m.carrier)]
    for k in range(1, N + 1):
        levels.append([t for t, _ in tuples])
        tuples = [(t + (y,), m.mul(p, y)) for t, p in tuples for y in ordered(m.carrier)
                  if m.defined(p, y)]

    def face(n, i, t):
        if i == 0:
            return t[1:]
        if i == n:
            return t[:-1]
        return t[:i - 1] + (m.mul(t[i - 1], t[i]),) + t[i + 1:]

    def degen(n, i, t):
        return t[:i] + (m.unit,) + t[i:]

    return TruncSSet.from_functions(N, levels, face, degen, "N(M)")


def edgewise_subdivision(x: TruncSSet, N: int | None = None) -> TruncSSet:
    """Level n is X_{2n+1}; d_i = d_i d_{2n+1-i}, s_i = s_i s_{2n+1-i}."""
    if N is None:
        N = (x.bound - 1) // 2
    if 2 * N + 1 > x.bound:
        raise ValueError(f"edgewise subdivision to level {N} needs input bound {2 * N + 1}, "
                         f"got {x.bound}")
    levels = [x.levels[2 * n + 1] for n in range(N + 1)]

    def face(n, i, s):
        # level n is X_{2n+1}: apply d_{2n+1-i} then d_i
        return x.faces[(2 * n, i)][x.faces[(2 * n + 1, 2 * n + 1 - i)][s]]

    def degen(n, i, s):
        return x.degens[(2 * n + 2, i)][x.degens[(2 * n + 1, 2 * n + 1 - i)][s]]

    return TruncSSet.from_functions(N, levels, face, degen, f"sd({x.name})")


def point_sset(N: int = 4) -> TruncSSet:
    return TruncSSet.from_functions(N, [["*"]] * (N + 1), lambda n, i, x: "*",
                                    lambda n, i, x: "*", "point")


# Segal conditions

def _spine_product(x: TruncSSet, n: int) -> set:
    out = [(e,) for e in x.levels[1]]
    for _ in range(n - 1):
        out = [p + (e,) for p in out for e in x.levels[1]
               if x.faces[(1, 0)][p[-1]] == x.faces[(1, 1)][e]]
    return set(out)


def _segal2_positions(n):
    return [(0, 2), (n - 2, n)]


def check_segal(x: TruncSSet, degree: int) -> Report:
    """Exact set-level Segal checks; homotopy pullbacks of sets are strict pullbacks."""
    if degree not in (1, 2):
        raise ValueError("degree must be 1 or 2")
    v, det = [], []
    if degree == 1:
        for n in range(2, x.bound + 1):
            image: dict = {}
            for s in x.levels[n]:
                sp = tuple(x.restrict(s, n, (k - 1, k)) for k in range(1, n + 1))
                image.setdefault(sp, []).append(s)
            target = _spine_product(x, n)
            clash = [ss for ss in image.values() if len(ss) > 1]
            missing = ordered(target - set(image))
            ok = not clash and not missing
            det.append(f"n={n} spine: {'bijection' if ok else 'not a bijection'} "
                       f"({len(x.levels[n])} simplices, {len(target)} spines)")
            if clash:
                v.append(f"n={n} spine: not injective, e.g. {ordered(clash[0])[:2]!r}")
            if missing:
                v.append(f"n={n} spine: not surjective, e.g. spine {missing[0]!r}")
    else:
        for n in range(3, x.bound + 1):
            for i, j in _segal2_positions(n):
                mid = tuple(range(i, j + 1))
                outer = tuple(range(0, i + 1)) + tuple(range(j, n + 1))
                m1, m2 = len(mid) - 1, len(outer) - 1
                # fibre product over X_{i,j}: edge (0, m1) of mid vs edge (i, i+1) of outer
                edge_mid = {a: x.restrict(a, m1, (0, m1)) for a in x.levels[m1]}
                edge_out = {b: x.restrict(b, m2, (i, i + 1)) for b in x.levels[m2]}
                by_edge: dict = {}
                for b, e in edge_out.items():
                    by_edge.setdefault(e, []).append(b)
                target = {(a, b) for a, e in edge_mid.items() for b in by_edge.get(e, ())}
                image: dict = {}
                for s in x.levels[n]:
                    key = (x.restrict(s, n, mid), x.restrict(s, n, outer))
                    image.setdefault(key, []).append(s)
                clash = [ss for ss in image.values() if len(ss) > 1]
                missing = ordered(target - set(image))
                ok = not clash and not missing
                det.append(f"n={n} position ({i},{j}): {'bijection' if ok else 'not a bijection'} "
                           f"({len(x.levels[n])} simplices, {len(target)} in the pullback)")
                if clash:
                    v.append(f"n={n} position ({i},{j}): not injective, e.g. "
                             f"{ordered(clash[0])[:2]!r}")
                if missing:
                    v.append(f"n={n} position ({i},{j}): not surjective, e.g. {missing[0]!r}")
    title = (f"{degree}-Segal (set level, strict pullbacks; verified up to level {x.bound})")
    return Report(title, not v, v, det)


def check_2segal_groupoids(sc: TruncSCat, require_groupoids: bool = True,
                           levels=None) -> Report:
    """Groupoid-level 2-Segal check using iso-comma pseudo-pullbacks.

    For each n and reduced position the canonical functor from X_n into the
    pseudo-pullback of X_{i..j} -> X_{ij} <- X_{0..i,j..n} must be an
    equivalence.
    """
    title = f"2-Segal (groupoid level, pseudo-pullbacks; verified up to level {sc.bound})"
    for n, c in enumerate(sc.levels):
        ok, wit = is_groupoid(c)
        if not ok and require_groupoids:
            raise ValueError(f"level {n} is not a groupoid: {wit!r} has no inverse")
    v, det = [], []
    for n in (levels or range(3, sc.bound + 1)):
        for i, j in _segal2_positions(n):
            mid = tuple(range(i, j + 1))
            outer = tuple(range(0, i + 1)) + tuple(range(j, n + 1))
            r_mid = sc.restriction(n, mid)
            r_out = sc.restriction(n, outer)
            e_mid = sc.restriction(len(mid) - 1, (0, len(mid) - 1))
            e_out = sc.restriction(len(outer) - 1, (i, i + 1))
            P, _, _, _ = pseudo_pullback(e_mid, e_out, groupoid_mode=require_groupoids)
            X = sc.levels[n]
            E = e_mid.target
            obj_map = {a: (r_mid.obj_map[a], r_out.obj_map[a],
                           E.ident(e_mid.obj_map[r_mid.obj_map[a]])) for a in X.objects}
            mor_map = {}
            for f, (a, b) in X.morphisms.items():
                mor_map[f] = (obj_map[a], obj_map[b], r_mid.mor_map[f], r_out.mor_map[f])
            comp = FunctorData(X, P, obj_map, mor_map, "comparison")
            fv = comp.validate()
            rep = check_functor_equivalence(comp)
            ok = fv.passed and rep.equivalence
            det.append(f"n={n} position ({i},{j}): "
                       f"{'equivalence' if ok else 'not an equivalence'} "
                       f"({len(X.objects)} objects -> {len(P.objects)} in the pseudo-pullback)")
            if not fv.passed:
                v.append(f"n={n} position ({i},{j}): comparison is not a functor")
            elif not ok:
                v.append(f"n={n} position ({i},{j}): {rep.witnesses[0] if rep.witnesses else rep.text()}")
    return Report(title, not v, v, det)


# isomorphism search

def find_sset_isomorphism(x: TruncSSet, y: TruncSSet, bound: int | None = None):
    """Levelwise bijection commuting with all faces and degeneracies, or None."""
    N = min(x.bound, y.bound) if bound is None else bound
    if x.sizes()[:N + 1] != y.sizes()[:N + 1]:
        return None
    cells = [(n, s) for n in range(N + 1) for s in x.levels[n]]

    def deg_sig(z, n, s):
        out = []
        if n == 0:
            return out
        for i in range(n):
            for t, u in z.degens[(n - 1, i)].items():
                if u == s:
                    out.append((i, t))
        return out

    xdeg = {(n, s): deg_sig(x, n, s) for n, s in cells}
    ydeg = {(n, s): deg_sig(y, n, s) for n in range(N + 1) for s in y.levels[n]}
    phi: dict = {}
    used: set = set()

    def candidates(n, s):
        for t in y.levels[n]:
            if (n, t) in used:
                continue
            if n > 0 and any(phi[(n - 1, x.faces[(n, i)][s])] != y.faces[(n, i)][t]
                             for i in range(n + 1)):
                continue
            if sorted((i, phi[(n - 1, a)]) for i, a in xdeg[(n, s)]) != sorted(ydeg[(n, t)]):
                continue
            yield t

    def go(k):
        if k == len(cells):
            return True
        n, s = cells[k]
        for t in candidates(n, s):
            phi[(n, s)] = t
            used.add((n, t))
            if go(k + 1):
                return True
            del phi[(n, s)]
            used.discard((n, t))
        return False

    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, len(cells) + 1000))
    try:
        found = go(0)
    finally:
        sys.setrecursionlimit(old)
    if not found:
        return None
    return [{s: phi[(n, s)] for s in x.levels[n]} for n in range(N + 1)]


def check_sset_isomorphism(x: TruncSSet, y: TruncSSet, maps) -> Report:
    """Independent verification that levelwise maps form an isomorphism."""
    v = []
    N = len(maps) - 1
    for n in range(N + 1):
        if sorted(maps[n].values(), key=repr) != sorted(y.levels[n], key=repr) or \
                set(maps[n]) != set(x.levels[n]):
            v.append(f"level {n} map is not a bijection")
    if not v:
        for n in range(1, N + 1):
            for i in range(n + 1):
                for s in x.levels[n]:
                    if maps[n - 1][x.faces[(n, i)][s]] != y.faces[(n, i)][maps[n][s]]:
                        v.append(f"d_{i} on level {n} not preserved at {s!r}")
                        break
        for n in range(N):
            for i in range(n + 1):
                for s in x.levels[n]:
                    if maps[n + 1][x.degens[(n, i)][s]] != y.degens[(n, i)][maps[n][s]]:
                        v.append(f"s_{i} on level {n} not preserved at {s!r}")
                        break
    return Report(f"simplicial isomorphism (levels 0..{N})", not v, v)
