"""Finite categories stored as explicit composition tables.

Everything here is exhaustive: functors are checked hom-set by hom-set and
isomorphisms are found by search, never assumed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Callable, Hashable, Iterable

Id = Hashable


def sortkey(x: Any):
    """Total order on the nested ids used throughout the package."""
    if x is None:
        return (0,)
    if isinstance(x, bool):
        return (1, int(x))
    if isinstance(x, int):
        return (1, x)
    if isinstance(x, str):
        return (2, x)
    if isinstance(x, tuple):
        return (3, tuple(sortkey(y) for y in x))
    if isinstance(x, frozenset):
        return (4, tuple(sorted(sortkey(y) for y in x)))
    return (5, repr(x))


def compact(x) -> str:
    """Short display name for an id: strings as-is, tuples without quotes or spaces."""
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return "(" + ",".join(compact(y) for y in x) + ")"
    return str(x)


def ordered(xs: Iterable) -> list:
    return sorted(xs, key=sortkey)


@dataclass
class Report:
    """Outcome of a check: pass/fail plus deterministic violation records."""

    title: str
    passed: bool
    violations: list[str] = field(default_factory=list)
    details: list[str] = field(default_factory=list)
    incomplete: str | None = None  # set when a check stopped on missing input data

    def __bool__(self) -> bool:
        return self.passed

    def text(self) -> str:
        status = "INCOMPLETE DATA" if self.incomplete else ("PASS" if self.passed else "FAIL")
        lines = [f"{self.title}: {status}"]
        if self.incomplete:
            lines.append(f"  incomplete data: {self.incomplete}")
        lines += [f"  {d}" for d in self.details]
        lines += [f"  violation: {v}" for v in self.violations]
        return "\n".join(lines)


ValidationReport = Report


class FinCat:
    """A finite category.

    ``morphisms`` maps a morphism id to ``(source, target)``; ``composition``
    maps ``(g, f)`` to ``g∘f`` for every pair with ``target(f) == source(g)``.
    """

    def __init__(self, objects, morphisms, identities, composition, name: str = ""):
        self.objects = tuple(ordered(set(objects)))
        self.morphisms: dict[Id, tuple[Id, Id]] = dict(morphisms)
        self.identities: dict[Id, Id] = dict(identities)
        self.composition: dict[tuple[Id, Id], Id] = dict(composition)
        self.name = name

    def __repr__(self):
        return (f"FinCat({self.name or '?'}: {len(self.objects)} objects, "
                f"{len(self.morphisms)} morphisms)")

    # structure access
    def src(self, m):
        return self.morphisms[m][0]

    def dst(self, m):
        return self.morphisms[m][1]

    def ident(self, a):
        return self.identities[a]

    def compose(self, g, f):
        return self.composition[(g, f)]

    def compose_path(self, ms: Iterable, start):
        """Compose ``ms`` left to right (first applied first); identity on ``start`` if empty."""
        acc = self.identities[start]
        for m in ms:
            acc = self.composition[(m, acc)]
        return acc

    @cached_property
    def _homs(self) -> dict[tuple[Id, Id], list]:
        homs: dict[tuple[Id, Id], list] = {}
        for m, (a, b) in self.morphisms.items():
            homs.setdefault((a, b), []).append(m)
        for k in homs:
            homs[k] = ordered(homs[k])
        return homs

    @cached_property
    def _out(self) -> dict[Id, list]:
        out: dict[Id, list] = {a: [] for a in self.objects}
        for m, (a, _) in self.morphisms.items():
            out.setdefault(a, []).append(m)
        return {a: ordered(ms) for a, ms in out.items()}

    @cached_property
    def _into(self) -> dict[Id, list]:
        into: dict[Id, list] = {a: [] for a in self.objects}
        for m, (_, b) in self.morphisms.items():
            into.setdefault(b, []).append(m)
        return {a: ordered(ms) for a, ms in into.items()}

    def hom(self, a, b) -> list:
        return self._homs.get((a, b), [])

    def out_of(self, a) -> list:
        return self._out.get(a, [])

    def into(self, b) -> list:
        return self._into.get(b, [])

    @cached_property
    def inverses(self) -> dict[Id, Id]:
        """Two-sided inverse of every invertible morphism."""
        inv = {}
        for m, (a, b) in self.morphisms.items():
            for n in self.hom(b, a):
                if (self.composition.get((n, m)) == self.identities.get(a)
                        and self.composition.get((m, n)) == self.identities.get(b)):
                    inv[m] = n
                    break
        return inv

    def is_iso(self, m) -> bool:
        return m in self.inverses

    def opposite(self, name: str = "") -> "FinCat":
        return FinCat(
            self.objects,
            {m: (b, a) for m, (a, b) in self.morphisms.items()},
            self.identities,
            {(f, g): h for (g, f), h in self.composition.items()},
            name or f"{self.name}^op",
        )

    def full_subcategory(self, objects, name: str = "") -> "FinCat":
        keep = set(objects)
        mors = {m: st for m, st in self.morphisms.items() if st[0] in keep and st[1] in keep}
        comp = {k: v for k, v in self.composition.items() if k[0] in mors and k[1] in mors}
        return FinCat(keep, mors, {a: self.identities[a] for a in keep}, comp, name)


def build_category(objects, morphisms: dict, identity: Callable, compose: Callable,
                   name: str = "") -> FinCat:
    """Materialise a FinCat from an identity rule and a composition rule.

    ``compose(g, f)`` must return the id of ``g∘f``; it is called exactly on
    composable pairs.
    """
    into: dict[Id, list] = {}
    out: dict[Id, list] = {}
    for m, (a, b) in morphisms.items():
        out.setdefault(a, []).append(m)
        into.setdefault(b, []).append(m)
    comp = {}
    for b in objects:
        for f in into.get(b, ()):
            for g in out.get(b, ()):
                comp[(g, f)] = compose(g, f)
    return FinCat(objects, morphisms, {a: identity(a) for a in objects}, comp, name)


def terminal_category(obj: Id = "*", name: str = "1") -> FinCat:
    m = ("id", obj)
    return FinCat([obj], {m: (obj, obj)}, {obj: m}, {(m, m): m}, name)


def group_category(elements, mult: Callable, unit, name: str = "") -> FinCat:
    """One-object category of a finite group (or monoid); composite g∘f is ``mult(g, f)``."""
    elements = ordered(elements)
    return FinCat(["*"], {g: ("*", "*") for g in elements}, {"*": unit},
                  {(g, f): mult(g, f) for g in elements for f in elements}, name)


def poset_category(elements, leq: Callable, name: str = "") -> FinCat:
    elements = ordered(elements)
    mors = {(a, b): (a, b) for a in elements for b in elements if leq(a, b)}
    return build_category(elements, mors, lambda a: (a, a),
                          lambda g, f: (f[0], g[1]), name)


def validate_category(c: FinCat) -> Report:
    """Check totality, closure, unit and associativity laws of the table."""
    v: list[str] = []
    objs = set(c.objects)
    for m, (a, b) in c.morphisms.items():
        if a not in objs:
            v.append(f"morphism {m!r}: unknown source {a!r}")
        if b not in objs:
            v.append(f"morphism {m!r}: unknown target {b!r}")
    for a in c.objects:
        i = c.identities.get(a)
        if i is None:
            v.append(f"object {a!r}: no identity")
        elif c.morphisms.get(i) != (a, a):
            v.append(f"object {a!r}: identity {i!r} has wrong endpoints")
    for (g, f), h in c.composition.items():
        if f not in c.morphisms or g not in c.morphisms:
            v.append(f"composite ({g!r},{f!r}): unknown morphism")
            continue
        if c.dst(f) != c.src(g):
            v.append(f"composite ({g!r},{f!r}): pair is not composable")
            continue
        if h not in c.morphisms:
            v.append(f"composite ({g!r},{f!r}) = {h!r}: unknown morphism")
        elif c.morphisms[h] != (c.src(f), c.dst(g)):
            v.append(f"composite ({g!r},{f!r}) = {h!r}: wrong endpoints")
    if v:
        return Report("category", False, ordered(v))

    for b in c.objects:
        for f in c.into(b):
            for g in c.out_of(b):
                if (g, f) not in c.composition:
                    v.append(f"missing composite ({g!r},{f!r})")
    for m, (a, b) in c.morphisms.items():
        if c.composition.get((c.identities[b], m)) != m or c.composition.get((m, c.identities[a])) != m:
            v.append(f"unit law fails at {m!r}")
    if not v:
        for b in c.objects:
            for f in c.into(b):
                for g in c.out_of(b):
                    gf = c.composition[(g, f)]
                    for h in c.out_of(c.dst(g)):
                        if c.composition[(h, gf)] != c.composition[(c.composition[(h, g)], f)]:
                            v.append(f"associativity fails at ({h!r},{g!r},{f!r})")
    return Report("category", not v, ordered(set(v)),
                  [f"{len(c.objects)} objects, {len(c.morphisms)} morphisms"])


def is_groupoid(c: FinCat) -> tuple[bool, Id | None]:
    """True iff every morphism is invertible; otherwise the first non-invertible one."""
    inv = c.inverses
    for m in ordered(c.morphisms):
        if m not in inv:
            return False, m
    return True, None


@dataclass
class FunctorData:
    source: FinCat
    target: FinCat
    obj_map: dict
    mor_map: dict
    name: str = ""

    def __call__(self, x):
        if x in self.mor_map:
            return self.mor_map[x]
        return self.obj_map[x]

    def validate(self) -> Report:
        v = []
        S, T = self.source, self.target
        for a in S.objects:
            if self.obj_map.get(a) not in T.identities:
                v.append(f"object {a!r} not mapped into target")
        if v:
            return Report(f"functor {self.name}", False, ordered(v))
        for m, (a, b) in S.morphisms.items():
            fm = self.mor_map.get(m)
            if fm not in T.morphisms:
                v.append(f"morphism {m!r} not mapped into target")
            elif T.morphisms[fm] != (self.obj_map[a], self.obj_map[b]):
                v.append(f"morphism {m!r}: endpoints not preserved")
        for a in S.objects:
            if self.mor_map.get(S.identities[a]) != T.identities[self.obj_map[a]]:
                v.append(f"identity of {a!r} not preserved")
        if not v:
            for (g, f), h in S.composition.items():
                if T.composition.get((self.mor_map[g], self.mor_map[f])) != self.mor_map[h]:
                    v.append(f"composite ({g!r},{f!r}) not preserved")
        return Report(f"functor {self.name}", not v, ordered(v))


def compose_functors(G: FunctorData, F: FunctorData, name: str = "") -> FunctorData:
    return FunctorData(F.source, G.target,
                       {a: G.obj_map[b] for a, b in F.obj_map.items()},
                       {m: G.mor_map[n] for m, n in F.mor_map.items()},
                       name or f"{G.name}∘{F.name}")


def identity_functor(c: FinCat) -> FunctorData:
    return FunctorData(c, c, {a: a for a in c.objects}, {m: m for m in c.morphisms}, "id")


@dataclass
class NatTransData:
    source: FunctorData
    target: FunctorData
    components: dict

    def validate(self) -> Report:
        F, G = self.source, self.target
        T = F.target
        v = []
        for a in F.source.objects:
            c = self.components.get(a)
            if c not in T.morphisms or T.morphisms[c] != (F.obj_map[a], G.obj_map[a]):
                v.append(f"component at {a!r} missing or ill-typed")
        if not v:
            for m, (a, b) in F.source.morphisms.items():
                lhs = T.compose(G.mor_map[m], self.components[a])
                rhs = T.compose(self.components[b], F.mor_map[m])
                if lhs != rhs:
                    v.append(f"naturality fails at {m!r}")
        return Report("natural transformation", not v, ordered(v))


@dataclass
class EquivalenceReport:
    full: bool
    faithful: bool
    essentially_surjective: bool
    witnesses: list[str] = field(default_factory=list)

    @property
    def fully_faithful(self) -> bool:
        return self.full and self.faithful

    @property
    def equivalence(self) -> bool:
        return self.fully_faithful and self.essentially_surjective

    def __bool__(self):
        return self.equivalence

    def text(self) -> str:
        s = (f"full={self.full} faithful={self.faithful} "
             f"essentially_surjective={self.essentially_surjective} "
             f"equivalence={self.equivalence}")
        return "\n".join([s] + [f"  witness: {w}" for w in self.witnesses])


def iso_classes(c: FinCat) -> dict[Id, Id]:
    """Map each object to the least object (in id order) isomorphic to it."""
    parent = {a: a for a in c.objects}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for m in c.inverses:
        a, b = c.morphisms[m]
        ra, rb = find(a), find(b)
        if ra != rb:
            lo, hi = ordered([ra, rb])
            parent[hi] = lo
    return {a: find(a) for a in c.objects}


def check_functor_equivalence(F: FunctorData, max_witnesses: int = 5) -> EquivalenceReport:
    """Exact hom-set bijection test plus essential surjectivity by iso search."""
    S, T = F.source, F.target
    full = faithful = True
    wit: list[str] = []
    for a in S.objects:
        for b in S.objects:
            src = S.hom(a, b)
            images = [F.mor_map[m] for m in src]
            if len(set(images)) != len(images):
                faithful = False
                if len(wit) < max_witnesses:
                    wit.append(f"not faithful on hom({a!r},{b!r})")
            if len(set(images)) != len(T.hom(F.obj_map[a], F.obj_map[b])):
                full = False
                if len(wit) < max_witnesses:
                    wit.append(f"not full on hom({a!r},{b!r})")
    cls = iso_classes(T)
    hit = {cls[F.obj_map[a]] for a in S.objects}
    missed = [b for b in T.objects if cls[b] not in hit]
    for b in missed[:max_witnesses]:
        wit.append(f"object {b!r} not in essential image")
    return EquivalenceReport(full, faithful, not missed, wit)


def is_isomorphism(F: FunctorData) -> bool:
    """Bijective on objects and on morphisms."""
    S, T = F.source, F.target
    return (len(set(F.obj_map.values())) == len(S.objects) == len(T.objects)
            and len(set(F.mor_map.values())) == len(S.morphisms) == len(T.morphisms))


def pseudo_pullback(F: FunctorData, G: FunctorData, groupoid_mode: bool = True):
    """Iso-comma category of the cospan ``F: C → E ← D: G``.

    Objects are ``(c, d, alpha)`` with ``alpha: F(c) → G(d)`` invertible; a
    morphism ``(p, q)`` must satisfy ``G(q)∘alpha = alpha'∘F(p)``.  Returns
    ``(P, p1, p2, theta)`` where ``theta`` maps each object of ``P`` to its
    ``alpha`` (the tautological components ``F∘p1 ⇒ G∘p2``).
    """
    if F.target is not G.target:
        raise ValueError("pseudo_pullback: functors do not share a target")
    C, D, E = F.source, G.source, F.target
    objects = []
    for c in C.objects:
        for d in D.objects:
            for alpha in E.hom(F.obj_map[c], G.obj_map[d]):
                if not E.is_iso(alpha):
                    if groupoid_mode:
                        raise ValueError(
                            f"pseudo_pullback: {alpha!r} is not invertible in the target")
                    continue
                objects.append((c, d, alpha))
    mors = {}
    for x in objects:
        c, d, al = x
        for y in objects:
            c2, d2, al2 = y
            for p in C.hom(c, c2):
                fp = F.mor_map[p]
                rhs = E.compose(al2, fp)
                for q in D.hom(d, d2):
                    if E.compose(G.mor_map[q], al) == rhs:
                        mors[(x, y, p, q)] = (x, y)
    P = build_category(
        objects, mors,
        lambda x: (x, x, C.ident(x[0]), D.ident(x[1])),
        lambda g, f: (f[0], g[1], C.compose(g[2], f[2]), D.compose(g[3], f[3])),
        "pseudo-pullback",
    )
    p1 = FunctorData(P, C, {x: x[0] for x in P.objects}, {m: m[2] for m in P.morphisms}, "p1")
    p2 = FunctorData(P, D, {x: x[1] for x in P.objects}, {m: m[3] for m in P.morphisms}, "p2")
    theta = {x: x[2] for x in P.objects}
    return P, p1, p2, theta


def strict_pullback(F: FunctorData, G: FunctorData):
    """Strict fibre product ``C ×_E D``: pairs with equal images."""
    C, D = F.source, G.source
    objs = [(c, d) for c in C.objects for d in D.objects if F.obj_map[c] == G.obj_map[d]]
    oset = set(objs)
    mors = {}
    for p, (a, b) in C.morphisms.items():
        fp = F.mor_map[p]
        for q, (a2, b2) in D.morphisms.items():
            if (a, a2) in oset and (b, b2) in oset and G.mor_map[q] == fp:
                mors[(p, q)] = ((a, a2), (b, b2))
    P = build_category(objs, mors, lambda x: (C.ident(x[0]), D.ident(x[1])),
                       lambda g, f: (C.compose(g[0], f[0]), D.compose(g[1], f[1])),
                       "strict-pullback")
    p1 = FunctorData(P, C, {x: x[0] for x in objs}, {m: m[0] for m in mors}, "p1")
    p2 = FunctorData(P, D, {x: x[1] for x in objs}, {m: m[1] for m in mors}, "p2")
    return P, p1, p2


def product_category(C: FinCat, D: FinCat) -> FinCat:
    objs = list(product(C.objects, D.objects))
    mors = {(p, q): ((a, a2), (b, b2))
            for p, (a, b) in C.morphisms.items() for q, (a2, b2) in D.morphisms.items()}
    return build_category(objs, mors, lambda x: (C.ident(x[0]), D.ident(x[1])),
                          lambda g, f: (C.compose(g[0], f[0]), D.compose(g[1], f[1])),
                          "product")
