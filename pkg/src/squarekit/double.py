"""Flat double categories and squares categories.

A square is stored as its boundary ``(top, left, right, bottom)``:

    A --top--> B
    |          |
   left      right
    v          v
    C -bottom> D

Horizontal morphisms live in ``hcat``, vertical ones in ``vcat``.  Flatness
means a square is nothing more than membership of its boundary in ``squares``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

from .catcore import FinCat, Report, build_category, ordered, validate_category

Square = tuple  # (top, left, right, bottom)


class FlatDoubleCat:
    def __init__(self, objects, hcat: FinCat, vcat: FinCat, squares, name: str = ""):
        self.objects = tuple(ordered(set(objects)))
        self.hcat = hcat
        self.vcat = vcat
        self.squares = frozenset(tuple(s) for s in squares)
        self.name = name

    def __repr__(self):
        return (f"FlatDoubleCat({self.name or '?'}: {len(self.objects)} objects, "
                f"{len(self.hcat.morphisms)} h, {len(self.vcat.morphisms)} v, "
                f"{len(self.squares)} squares)")

    def is_square(self, top, left, right, bottom) -> bool:
        return (top, left, right, bottom) in self.squares

    def corners(self, sq: Square):
        """(A, B, C, D) = (top-left, top-right, bottom-left, bottom-right)."""
        top, left, right, bottom = sq
        return (self.hcat.src(top), self.hcat.dst(top),
                self.hcat.src(bottom), self.hcat.dst(bottom))

    @cached_property
    def ordered_squares(self) -> list:
        return ordered(self.squares)

    @cached_property
    def _by_span(self) -> dict:
        idx: dict = {}
        for s in self.ordered_squares:
            idx.setdefault((s[0], s[1]), []).append(s)
        return idx

    @cached_property
    def _by_cospan(self) -> dict:
        idx: dict = {}
        for s in self.ordered_squares:
            idx.setdefault((s[2], s[3]), []).append(s)
        return idx

    @cached_property
    def _by_left(self) -> dict:
        idx: dict = {}
        for s in self.ordered_squares:
            idx.setdefault(s[1], []).append(s)
        return idx

    @cached_property
    def _by_top(self) -> dict:
        idx: dict = {}
        for s in self.ordered_squares:
            idx.setdefault(s[0], []).append(s)
        return idx

    def squares_with_span(self, f, u) -> list:
        return self._by_span.get((f, u), [])

    def squares_with_cospan(self, v, g) -> list:
        return self._by_cospan.get((v, g), [])

    def squares_with_left(self, u) -> list:
        return self._by_left.get(u, [])

    def squares_with_top(self, f) -> list:
        return self._by_top.get(f, [])

    def spans(self) -> list:
        """All pairs (f: A↣B, u: A↠C) sharing a source."""
        out = []
        for a in self.objects:
            for f in self.hcat.out_of(a):
                for u in self.vcat.out_of(a):
                    out.append((f, u))
        return out

    def cospans(self) -> list:
        """All pairs (v: B↠D, g: C↣D) sharing a target."""
        out = []
        for d in self.objects:
            for v in self.vcat.into(d):
                for g in self.hcat.into(d):
                    out.append((v, g))
        return out

    # morphisms between squares, i.e. vertical transformations of the square shape
    def square_morphisms(self, s1: Square, s2: Square) -> list:
        V = self.vcat
        f, u, v, g = s1
        f2, u2, v2, g2 = s2
        A, B, C, D = self.corners(s1)
        A2, B2, C2, D2 = self.corners(s2)
        out = []
        for a in V.hom(A, A2):
            for b in V.hom(B, B2):
                if not self.is_square(f, a, b, f2):
                    continue
                ua = V.compose(u2, a)
                vb = V.compose(v2, b)
                for c in V.hom(C, C2):
                    if V.compose(c, u) != ua:
                        continue
                    for d in V.hom(D, D2):
                        if V.compose(d, v) == vb and self.is_square(g, c, d, g2):
                            out.append((a, b, c, d))
        return out

    def span_morphisms(self, sp1, sp2) -> list:
        H, V = self.hcat, self.vcat
        f, u = sp1
        f2, u2 = sp2
        A, B, C = H.src(f), H.dst(f), V.dst(u)
        A2, B2, C2 = H.src(f2), H.dst(f2), V.dst(u2)
        out = []
        for a in V.hom(A, A2):
            ua = V.compose(u2, a)
            for b in V.hom(B, B2):
                if not self.is_square(f, a, b, f2):
                    continue
                for c in V.hom(C, C2):
                    if V.compose(c, u) == ua:
                        out.append((a, b, c))
        return out

    def cospan_morphisms(self, cs1, cs2) -> list:
        H, V = self.hcat, self.vcat
        v, g = cs1
        v2, g2 = cs2
        B, C, D = V.src(v), H.src(g), H.dst(g)
        B2, C2, D2 = V.src(v2), H.src(g2), H.dst(g2)
        out = []
        for b in V.hom(B, B2):
            vb = V.compose(v2, b)
            for c in V.hom(C, C2):
                for d in V.hom(D, D2):
                    if V.compose(d, v) == vb and self.is_square(g, c, d, g2):
                        out.append((b, c, d))
        return out


class SquaresCat:
    """A flat double category with a basepoint ``O``.

    Pointing (O initial horizontally, terminal vertically) is not enforced at
    construction; ``validate_squares_category`` checks it.
    """

    def __init__(self, base: FlatDoubleCat, basepoint, completion: "CompletionData | None" = None):
        self.base = base
        self.basepoint = basepoint
        self.completion = completion

    def __getattr__(self, name):
        # delegate double-category structure to the base
        if name in ("base", "basepoint", "completion"):
            raise AttributeError(name)
        return getattr(self.base, name)

    def __repr__(self):
        return f"SquaresCat({self.base!r}, O={self.basepoint!r})"

    @property
    def name(self):
        return self.base.name

    def zero_h(self, a):
        """The unique horizontal morphism O↣a."""
        return self.base.hcat.hom(self.basepoint, a)[0]

    def zero_v(self, a):
        """The unique vertical morphism a↠O."""
        return self.base.vcat.hom(a, self.basepoint)[0]


def trivial_squares_category() -> SquaresCat:
    """The one-object squares category: only O, identities and the identity square."""
    o = "O"
    h = FinCat([o], {"h": (o, o)}, {o: "h"}, {("h", "h"): "h"}, "H")
    v = FinCat([o], {"v": (o, o)}, {o: "v"}, {("v", "v"): "v"}, "V")
    base = FlatDoubleCat([o], h, v, [("h", "v", "v", "h")], "point")
    comp = CompletionData.from_tables(
        span={("h", "v"): ("h", "v", "v", "h")},
        span_action={(("h", "v"), ("h", "v"), ("v", "v", "v")): "v"},
        w={("h", "v", "v", "h"): "v"},
        cospan={("v", "h"): ("h", "v", "v", "h")},
        cospan_action={(("v", "h"), ("v", "h"), ("v", "v", "v")): "v"},
        u={("h", "v", "v", "h"): "v"},
    )
    return SquaresCat(base, o, comp)


# validation

def _check_flat(d: FlatDoubleCat, v: list):
    H, V = d.hcat, d.vcat
    for name, c in (("hcat", H), ("vcat", V)):
        r = validate_category(c)
        v.extend(f"{name}: {x}" for x in r.violations)
        if set(c.objects) != set(d.objects):
            v.append(f"{name}: object set differs from the double category's")
    if v:
        return
    bad = False
    for s in d.ordered_squares:
        top, left, right, bottom = s
        if (top not in H.morphisms or bottom not in H.morphisms
                or left not in V.morphisms or right not in V.morphisms):
            v.append(f"square {s!r}: unknown edge")
            bad = True
            continue
        if not (H.src(top) == V.src(left) and H.dst(top) == V.src(right)
                and V.dst(left) == H.src(bottom) and V.dst(right) == H.dst(bottom)):
            v.append(f"square {s!r}: boundary does not close")
            bad = True
    if bad:
        return
    for u in ordered(V.morphisms):
        a, c = V.morphisms[u]
        if not d.is_square(H.ident(a), u, u, H.ident(c)):
            v.append(f"missing horizontal identity square on v-mor {u!r}")
    for f in ordered(H.morphisms):
        a, b = H.morphisms[f]
        if not d.is_square(f, V.ident(a), V.ident(b), f):
            v.append(f"missing vertical identity square on h-mor {f!r}")
    for s1 in d.ordered_squares:
        for s2 in d.squares_with_left(s1[2]):
            comp = (H.compose(s2[0], s1[0]), s1[1], s2[2], H.compose(s2[3], s1[3]))
            if comp not in d.squares:
                v.append(f"horizontal pasting of {s1!r} and {s2!r} is not a square")
        for s2 in d.squares_with_top(s1[3]):
            comp = (s1[0], V.compose(s2[1], s1[1]), V.compose(s2[2], s1[2]), s2[3])
            if comp not in d.squares:
                v.append(f"vertical pasting of {s1!r} and {s2!r} is not a square")


def validate_flat_double(d: FlatDoubleCat) -> Report:
    v: list[str] = []
    _check_flat(d, v)
    return Report("flat double category", not v, v,
                  [f"{len(d.objects)} objects, {len(d.hcat.morphisms)} h-mors, "
                   f"{len(d.vcat.morphisms)} v-mors, {len(d.squares)} squares"])


def _pointing_violations(d: FlatDoubleCat, o) -> list:
    v = []
    if o not in d.objects:
        return [f"basepoint {o!r} is not an object"]
    for a in d.objects:
        n = len(d.hcat.hom(o, a))
        if n != 1:
            v.append(f"object {a!r}: {n} h-mors from the basepoint (need exactly 1)")
        n = len(d.vcat.hom(a, o))
        if n != 1:
            v.append(f"object {a!r}: {n} v-mors to the basepoint (need exactly 1)")
    return v


def validate_squares_category(d: SquaresCat) -> Report:
    v: list[str] = []
    _check_flat(d.base, v)
    if not v:
        v.extend(_pointing_violations(d.base, d.basepoint))
    b = d.base
    return Report("squares category", not v, v,
                  [f"{len(b.objects)} objects, {len(b.hcat.morphisms)} h-mors, "
                   f"{len(b.vcat.morphisms)} v-mors, {len(b.squares)} squares"])


# weak equivalences

@dataclass
class WeqSets:
    hweq: dict = field(default_factory=dict)  # h-mor -> witnessing square
    vweq: dict = field(default_factory=dict)  # v-mor -> witnessing square

    def __repr__(self):
        return f"WeqSets(hweq={ordered(self.hweq)}, vweq={ordered(self.vweq)})"


def weak_equivalences(d: SquaresCat) -> WeqSets:
    """Horizontal: (f, A↠O, B↠O, id_O) is a square.  Vertical: (O↣A, id_O, u, O↣B) is."""
    H, V, o = d.hcat, d.vcat, d.basepoint
    out = WeqSets()
    for f in ordered(H.morphisms):
        a, b = H.morphisms[f]
        sq = (f, d.zero_v(a), d.zero_v(b), H.ident(o))
        if d.is_square(*sq):
            out.hweq[f] = sq
    for u in ordered(V.morphisms):
        a, b = V.morphisms[u]
        sq = (d.zero_h(a), V.ident(o), u, d.zero_h(b))
        if d.is_square(*sq):
            out.vweq[u] = sq
    return out


# completion data

@dataclass
class CompletionData:
    """Span/cospan completions and their comparison maps, as lookup functions.

    Every function returns ``None`` when it has no answer, which the checker
    reports as incomplete data.

    - ``span_complete(f, u)``: a square whose top/left are ``f``/``u``
    - ``span_action(span, span2, (a, b, c))``: the induced ``D0↠D0'``
    - ``w(square)``: the comparison ``D0↠D`` from the completion to the square
    - ``cospan_complete(v, g)``, ``cospan_action(cospan, cospan2, (b, c, d))``,
      ``u(square)``: the duals, with ``u(square): A0↠A``
    """

    span_complete: Callable
    span_action: Callable
    w: Callable
    cospan_complete: Optional[Callable] = None
    cospan_action: Optional[Callable] = None
    u: Optional[Callable] = None

    @classmethod
    def from_tables(cls, span, span_action, w, cospan=None, cospan_action=None, u=None):
        """Wrap dicts keyed by the call arguments (a single argument is its own key)."""
        def look(t):
            if t is None:
                return None
            return lambda *k: t.get(k if len(k) > 1 else k[0])
        return cls(look(span), look(span_action), look(w),
                   look(cospan), look(cospan_action), look(u))


def search_completions(d: SquaresCat, stable: bool = True) -> CompletionData:
    """Brute-force completions: take the first candidate in id order.

    Only sensible for tiny inputs, or when completions are unique.  Missing
    candidates come back as ``None``.
    """
    V = d.vcat

    def span_complete(f, u):
        c = d.squares_with_span(f, u)
        return c[0] if c else None

    def span_action(sp1, sp2, abc):
        s1, s2 = span_complete(*sp1), span_complete(*sp2)
        if s1 is None or s2 is None:
            return None
        a, b, c = abc
        D1, D2 = d.corners(s1)[3], d.corners(s2)[3]
        for dd in V.hom(D1, D2):
            if V.compose(dd, s1[2]) == V.compose(s2[2], b) and d.is_square(s1[3], c, dd, s2[3]):
                return dd
        return None

    def w(sq):
        s0 = span_complete(sq[0], sq[1])
        if s0 is None:
            return None
        D0, D = d.corners(s0)[3], d.corners(sq)[3]
        C = d.corners(sq)[2]
        for x in V.hom(D0, D):
            if V.compose(x, s0[2]) == sq[2] and d.is_square(s0[3], V.ident(C), x, sq[3]):
                return x
        return None

    def cospan_complete(v, g):
        c = d.squares_with_cospan(v, g)
        return c[0] if c else None

    def cospan_action(cs1, cs2, bcd):
        s1, s2 = cospan_complete(*cs1), cospan_complete(*cs2)
        if s1 is None or s2 is None:
            return None
        b, c, _ = bcd
        A1, A2 = d.corners(s1)[0], d.corners(s2)[0]
        for a in V.hom(A1, A2):
            if d.is_square(s1[0], a, b, s2[0]) and V.compose(c, s1[1]) == V.compose(s2[1], a):
                return a
        return None

    def u(sq):
        s0 = cospan_complete(sq[2], sq[3])
        if s0 is None:
            return None
        A0, A = d.corners(s0)[0], d.corners(sq)[0]
        B = d.corners(sq)[1]
        for x in V.hom(A0, A):
            if d.is_square(s0[0], x, V.ident(B), sq[0]) and V.compose(sq[1], x) == s0[1]:
                return x
        return None

    if not stable:
        return CompletionData(span_complete, span_action, w)
    return CompletionData(span_complete, span_action, w, cospan_complete, cospan_action, u)


class _Incomplete(Exception):
    pass


def _need(x, what):
    if x is None:
        raise _Incomplete(what)
    return x


def _check_span_side(d, comp: CompletionData, v: list, max_v: int):
    H, V = d.hcat, d.vcat
    spans = d.spans()
    done = {}
    for sp in spans:
        s = _need(comp.span_complete(*sp), f"span {sp!r} has no completion")
        if s not in d.squares:
            v.append(f"completion of span {sp!r} is not a square: {s!r}")
        elif (s[0], s[1]) != sp:
            v.append(f"completion of span {sp!r} has the wrong top/left edges")
        done[sp] = s
    if v:
        return
    # functoriality of s on morphisms of spans
    mors = {}
    for sp1 in spans:
        for sp2 in spans:
            for m in d.span_morphisms(sp1, sp2):
                s1, s2 = done[sp1], done[sp2]
                dd = _need(comp.span_action(sp1, sp2, m),
                           f"span morphism {m!r} from {sp1!r} to {sp2!r} has no induced map")
                a, b, c = m
                D1, D2 = d.corners(s1)[3], d.corners(s2)[3]
                if V.morphisms.get(dd) != (D1, D2):
                    v.append(f"induced map {dd!r} for {m!r} ({sp1!r}->{sp2!r}) has wrong endpoints")
                elif not d.is_square(s1[3], c, dd, s2[3]):
                    v.append(f"induced map {dd!r} for {m!r} ({sp1!r}->{sp2!r}): bottom face is not a square")
                elif V.compose(dd, s1[2]) != V.compose(s2[2], b):
                    v.append(f"induced map {dd!r} for {m!r} ({sp1!r}->{sp2!r}): right face does not commute")
                mors[(sp1, sp2, m)] = dd
                if len(v) >= max_v:
                    return
    if v:
        return
    for sp in spans:
        a = H.src(sp[0])
        ident = (V.ident(a), V.ident(H.dst(sp[0])), V.ident(V.dst(sp[1])))
        if mors.get((sp, sp, ident)) != V.ident(d.corners(done[sp])[3]):
            v.append(f"span action does not preserve the identity of {sp!r}")
    by_src: dict = {}
    for (sp1, sp2, m), dd in mors.items():
        by_src.setdefault(sp1, []).append((sp2, m, dd))
    for (sp1, sp2, m), dd in mors.items():
        for sp3, m2, dd2 in by_src.get(sp2, ()):
            mc = tuple(V.compose(y, x) for x, y in zip(m, m2))
            if mors[(sp1, sp3, mc)] != V.compose(dd2, dd):
                v.append(f"span action does not preserve the composite {m2!r}∘{m!r}")
                if len(v) >= max_v:
                    return
    # w: components and naturality
    ws = {}
    for sq in d.ordered_squares:
        s0 = done[(sq[0], sq[1])]
        x = _need(comp.w(sq), f"square {sq!r} has no w component")
        A, B, C, D = d.corners(sq)
        if V.morphisms.get(x) != (d.corners(s0)[3], D):
            v.append(f"w at {sq!r} has wrong endpoints")
        elif not d.is_square(s0[3], V.ident(C), x, sq[3]):
            v.append(f"w at {sq!r}: bottom face is not a square")
        elif V.compose(x, s0[2]) != sq[2]:
            v.append(f"w at {sq!r}: right face does not commute")
        ws[sq] = x
    if v:
        return
    for s1 in d.ordered_squares:
        for s2 in d.ordered_squares:
            for m in d.square_morphisms(s1, s2):
                a, b, c, dd = m
                ind = mors[((s1[0], s1[1]), (s2[0], s2[1]), (a, b, c))]
                if V.compose(dd, ws[s1]) != V.compose(ws[s2], ind):
                    v.append(f"w is not natural at {m!r} from {s1!r} to {s2!r}")
                    if len(v) >= max_v:
                        return


def _check_cospan_side(d, comp: CompletionData, weq: WeqSets, v: list, max_v: int):
    H, V = d.hcat, d.vcat
    if comp.cospan_complete is None or comp.cospan_action is None or comp.u is None:
        raise _Incomplete("no cospan completion data supplied")
    cospans = d.cospans()
    done = {}
    for cs in cospans:
        s = _need(comp.cospan_complete(*cs), f"cospan {cs!r} has no completion")
        if s not in d.squares:
            v.append(f"completion of cospan {cs!r} is not a square: {s!r}")
        elif (s[2], s[3]) != cs:
            v.append(f"completion of cospan {cs!r} has the wrong right/bottom edges")
        done[cs] = s
    if v:
        return
    mors = {}
    for cs1 in cospans:
        for cs2 in cospans:
            for m in d.cospan_morphisms(cs1, cs2):
                s1, s2 = done[cs1], done[cs2]
                a = _need(comp.cospan_action(cs1, cs2, m),
                          f"cospan morphism {m!r} from {cs1!r} to {cs2!r} has no induced map")
                b, c, _ = m
                A1, A2 = d.corners(s1)[0], d.corners(s2)[0]
                if V.morphisms.get(a) != (A1, A2):
                    v.append(f"induced map {a!r} for {m!r} ({cs1!r}->{cs2!r}) has wrong endpoints")
                elif not d.is_square(s1[0], a, b, s2[0]):
                    v.append(f"induced map {a!r} for {m!r} ({cs1!r}->{cs2!r}): top face is not a square")
                elif V.compose(c, s1[1]) != V.compose(s2[1], a):
                    v.append(f"induced map {a!r} for {m!r} ({cs1!r}->{cs2!r}): left face does not commute")
                mors[(cs1, cs2, m)] = a
                if len(v) >= max_v:
                    return
    if v:
        return
    for cs in cospans:
        ident = (V.ident(V.src(cs[0])), V.ident(H.src(cs[1])), V.ident(H.dst(cs[1])))
        if mors.get((cs, cs, ident)) != V.ident(d.corners(done[cs])[0]):
            v.append(f"cospan action does not preserve the identity of {cs!r}")
    by_src: dict = {}
    for (cs1, cs2, m), a in mors.items():
        by_src.setdefault(cs1, []).append((cs2, m, a))
    for (cs1, cs2, m), a in mors.items():
        for cs3, m2, a2 in by_src.get(cs2, ()):
            mc = tuple(V.compose(y, x) for x, y in zip(m, m2))
            if mors[(cs1, cs3, mc)] != V.compose(a2, a):
                v.append(f"cospan action does not preserve the composite {m2!r}∘{m!r}")
                if len(v) >= max_v:
                    return
    us = {}
    for sq in d.ordered_squares:
        s0 = done[(sq[2], sq[3])]
        x = _need(comp.u(sq), f"square {sq!r} has no u component")
        A, B, C, D = d.corners(sq)
        if V.morphisms.get(x) != (d.corners(s0)[0], A):
            v.append(f"u at {sq!r} has wrong endpoints")
        elif not d.is_square(s0[0], x, V.ident(B), sq[0]):
            v.append(f"u at {sq!r}: top face is not a square")
        elif V.compose(sq[1], x) != s0[1]:
            v.append(f"u at {sq!r}: left face does not commute")
        elif x not in weq.vweq:
            v.append(f"u at {sq!r} is not a weak equivalence: {x!r}")
        us[sq] = x
    if v:
        return
    for s1 in d.ordered_squares:
        for s2 in d.ordered_squares:
            for m in d.square_morphisms(s1, s2):
                a, b, c, dd = m
                ind = mors[((s1[2], s1[3]), (s2[2], s2[3]), (b, c, dd))]
                if V.compose(a, us[s1]) != V.compose(us[s2], ind):
                    v.append(f"u is not natural at {m!r} from {s1!r} to {s2!r}")
                    if len(v) >= max_v:
                        return


def check_completion_axioms(d: SquaresCat, comp: CompletionData | None = None,
                            mode: str = "proto", max_violations: int = 20) -> Report:
    """Check the proto-Waldhausen (``mode="proto"``) or stable axioms against supplied data."""
    if mode not in ("proto", "stable", "proto-waldhausen"):
        raise ValueError(f"unknown mode {mode!r}")
    comp = comp or d.completion
    title = f"completion axioms ({'stable' if mode == 'stable' else 'proto-Waldhausen'})"
    if comp is None:
        return Report(title, False, [], incomplete="no completion data supplied")
    v: list[str] = []
    try:
        _check_span_side(d, comp, v, max_violations)
        if mode == "stable" and not v:
            _check_cospan_side(d, comp, weak_equivalences(d), v, max_violations)
    except _Incomplete as e:
        return Report(title, False, v, incomplete=str(e))
    return Report(title, not v, v)


def check_isostable(d: SquaresCat, comp: CompletionData | None = None) -> Report:
    """Stable, weak equivalences invertible, and squares closed under flipping."""
    r = check_completion_axioms(d, comp, "stable")
    if not r.passed:
        r.title = "isostable (a: stability)"
        return r
    V = d.vcat
    weq = weak_equivalences(d)
    v = [f"(b) vertical weak equivalence {u!r} is not invertible"
         for u in weq.vweq if not V.is_iso(u)]
    if not v:
        for sq in d.ordered_squares:
            f, g, h, k = sq
            if g in weq.vweq and h in weq.vweq:
                flip = (k, V.inverses[g], V.inverses[h], f)
                if flip not in d.squares:
                    v.append(f"(c) flip of square {sq!r} is not a square: {flip!r}")
    return Report("isostable", not v, ordered(v))


# constructions on squares categories

def opposite_vertical(d, basepoint=None) -> SquaresCat:
    """Replace vcat by its opposite; a square (f, u, v, g) becomes (g, u, v, f).

    Accepts a SquaresCat or a FlatDoubleCat plus basepoint.  Raises when the
    basepoint gives a pointed structure neither before nor after the flip.
    """
    if isinstance(d, SquaresCat):
        base, o = d.base, d.basepoint
    else:
        base, o = d, basepoint
    new = FlatDoubleCat(base.objects, base.hcat, base.vcat.opposite(),
                        [(g, u, v, f) for f, u, v, g in base.squares], base.name + "^vop")
    if _pointing_violations(new, o) and _pointing_violations(base, o):
        raise ValueError(f"basepoint {o!r} is not initial in both directions")
    return SquaresCat(new, o)


def extension_category(d: SquaresCat) -> SquaresCat:
    """E□: objects are squares of d, with pointwise structure.

    A horizontal morphism between squares is four h-mors whose mixed faces are
    squares of d and whose all-horizontal faces commute; vertical morphisms are
    the dual.  Squares of E□ are pointwise squares.
    """
    H, V = d.hcat, d.vcat
    objs = d.ordered_squares
    hm, vm = {}, {}
    for s1 in objs:
        A, B, C, D = d.corners(s1)
        for s2 in objs:
            A2, B2, C2, D2 = d.corners(s2)
            # horizontal: (p, q, r, s) with left/right faces squares, top/bottom commuting
            for p in H.hom(A, A2):
                for q in H.hom(B, B2):
                    if H.compose(q, s1[0]) != H.compose(s2[0], p):
                        continue
                    for r in H.hom(C, C2):
                        if not d.is_square(p, s1[1], s2[1], r):
                            continue
                        for s in H.hom(D, D2):
                            if (d.is_square(q, s1[2], s2[2], s)
                                    and H.compose(s, s1[3]) == H.compose(s2[3], r)):
                                hm[(s1, s2, (p, q, r, s))] = (s1, s2)
            vm.update({(s1, s2, m): (s1, s2) for m in d.square_morphisms(s1, s2)})

    def hcomp(g, f):
        return (f[0], g[1], tuple(H.compose(y, x) for x, y in zip(f[2], g[2])))

    def vcomp(g, f):
        return (f[0], g[1], tuple(V.compose(y, x) for x, y in zip(f[2], g[2])))

    def hid(s):
        return (s, s, tuple(H.ident(x) for x in d.corners(s)))

    def vid(s):
        return (s, s, tuple(V.ident(x) for x in d.corners(s)))

    hcat = build_category(objs, hm, hid, hcomp, "E-h")
    vcat = build_category(objs, vm, vid, vcomp, "E-v")
    hout: dict = {}
    for m in hm:
        hout.setdefault(m[0], []).append(m)
    vout: dict = {}
    for m in vm:
        vout.setdefault(m[0], []).append(m)
    sqs = []
    for top in ordered(hm):
        for left in vout.get(top[0], ()):
            for right in vout.get(top[1], ()):
                for bottom in hout.get(left[1], ()):
                    if bottom[1] != right[1]:
                        continue
                    if all(d.is_square(top[2][i], left[2][i], right[2][i], bottom[2][i])
                           for i in range(4)):
                        sqs.append((top, left, right, bottom))
    o = d.basepoint
    idO = (H.ident(o), V.ident(o), V.ident(o), H.ident(o))
    return SquaresCat(FlatDoubleCat(objs, hcat, vcat, sqs, f"E({d.name})"), idO)
