"""JSON interchange for squares categories and truncated simplicial sets.

All ids are strings.  Identities are listed explicitly, composites are
[g, f, g∘f] triples, squares are given by their four boundary ids.  Unknown
keys are rejected; every error names the offending field path.
"""
from __future__ import annotations

import json

from .catcore import FinCat, compact, ordered
from .double import CompletionData, FlatDoubleCat, SquaresCat
from .simplicial import TruncSSet

TOP_KEYS = {"objects", "hmor", "vmor", "hid", "vid", "hcomp", "vcomp", "squares",
            "basepoint", "completions", "name"}
REQUIRED = TOP_KEYS - {"completions", "name"}
SQ_KEYS = ("top", "left", "right", "bottom")
COMPLETION_KEYS = {"span", "span_action", "w", "cospan", "cospan_action", "u"}


class InterchangeError(ValueError):
    """Malformed input; the message starts with the field path."""


def _fail(path, msg):
    raise InterchangeError(f"{path}: {msg}")


def _expect(x, typ, path):
    if not isinstance(x, typ):
        _fail(path, f"expected {getattr(typ, '__name__', typ)}, got {type(x).__name__}")
    return x


def _keys(obj, allowed, required, path):
    _expect(obj, dict, path)
    extra = sorted(set(obj) - set(allowed))
    if extra:
        _fail(f"{path}.{extra[0]}" if path else extra[0], "unknown key")
    missing = sorted(set(required) - set(obj))
    if missing:
        _fail(f"{path}.{missing[0]}" if path else missing[0], "missing key")


def _category(objs, mors, ids, comps, label) -> FinCat:
    morphisms = {}
    for k, m in enumerate(_expect(mors, list, label)):
        p = f"{label}[{k}]"
        _keys(m, ("id", "src", "dst"), ("id", "src", "dst"), p)
        for f in ("id", "src", "dst"):
            _expect(m[f], str, f"{p}.{f}")
        for f in ("src", "dst"):
            if m[f] not in objs:
                _fail(f"{p}.{f}", f"unknown object {m[f]!r}")
        if m["id"] in morphisms:
            _fail(f"{p}.id", f"duplicate morphism id {m['id']!r}")
        morphisms[m["id"]] = (m["src"], m["dst"])
    idl = label[0] + "id"
    _expect(ids, dict, idl)
    identities = {}
    for x in objs:
        if x not in ids:
            _fail(f"{idl}.{x}", "missing identity")
    for x, i in ids.items():
        if x not in objs:
            _fail(f"{idl}.{x}", f"unknown object {x!r}")
        if i not in morphisms:
            _fail(f"{idl}.{x}", f"unknown morphism {i!r}")
        identities[x] = i
    cl = label[0] + "comp"
    composition = {}
    for k, t in enumerate(_expect(comps, list, cl)):
        p = f"{cl}[{k}]"
        if not (isinstance(t, list) and len(t) == 3):
            _fail(p, "expected [g, f, gf]")
        for j, m in enumerate(t):
            if m not in morphisms:
                _fail(f"{p}[{j}]", f"unknown morphism {m!r}")
        composition[(t[0], t[1])] = t[2]
    return FinCat(objs, morphisms, identities, composition, label)


def _square(obj, path, hm, vm):
    _keys(obj, SQ_KEYS, SQ_KEYS, path)
    for f in SQ_KEYS:
        pool = hm if f in ("top", "bottom") else vm
        if obj[f] not in pool:
            _fail(f"{path}.{f}", f"unknown {'h' if pool is hm else 'v'}-morphism {obj[f]!r}")
    return tuple(obj[f] for f in SQ_KEYS)


def _completions(block, hm, vm):
    _keys(block, COMPLETION_KEYS, (), "completions")
    tables = {}
    for key in ("span", "cospan"):
        t = {}
        a, b = ("top", "left") if key == "span" else ("right", "bottom")
        for k, e in enumerate(block.get(key, [])):
            p = f"completions.{key}[{k}]"
            _keys(e, (a, b, "square"), (a, b, "square"), p)
            t[(e[a], e[b])] = _square(e["square"], f"{p}.square", hm, vm)
        tables[key] = t if key in block else None
    for key, arg in (("span_action", "spans"), ("cospan_action", "cospans")):
        t = {}
        for k, e in enumerate(block.get(key, [])):
            p = f"completions.{key}[{k}]"
            _keys(e, (arg, "maps", "result"), (arg, "maps", "result"), p)
            s1, s2 = e[arg]
            t[(tuple(s1), tuple(s2), tuple(e["maps"]))] = e["result"]
        tables[key] = t if key in block else None
    for key in ("w", "u"):
        t = {}
        for k, e in enumerate(block.get(key, [])):
            p = f"completions.{key}[{k}]"
            _keys(e, ("square", "map"), ("square", "map"), p)
            t[_square(e["square"], f"{p}.square", hm, vm)] = e["map"]
        tables[key] = t if key in block else None
    if tables["span"] is None:
        _fail("completions.span", "missing key")
    return CompletionData.from_tables(tables["span"], tables["span_action"], tables["w"],
                                      tables["cospan"], tables["cospan_action"], tables["u"])


def parse_squares(doc: dict) -> tuple[SquaresCat, CompletionData | None]:
    _keys(doc, TOP_KEYS, REQUIRED, "")
    objs = _expect(doc["objects"], list, "objects")
    for k, x in enumerate(objs):
        _expect(x, str, f"objects[{k}]")
    if len(set(objs)) != len(objs):
        _fail("objects", "duplicate object ids")
    H = _category(objs, doc["hmor"], doc["hid"], doc["hcomp"], "hmor")
    V = _category(objs, doc["vmor"], doc["vid"], doc["vcomp"], "vmor")
    sqs = [_square(s, f"squares[{k}]", H.morphisms, V.morphisms)
           for k, s in enumerate(_expect(doc["squares"], list, "squares"))]
    o = doc["basepoint"]
    if o not in objs:
        _fail("basepoint", f"unknown object {o!r}")
    name = doc.get("name", "")
    d = SquaresCat(FlatDoubleCat(objs, H, V, sqs, name), o)
    comp = _completions(doc["completions"], H.morphisms, V.morphisms) if "completions" in doc else None
    return d, comp


def load_squares(path) -> tuple[SquaresCat, CompletionData | None]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise InterchangeError(f"line {e.lineno}: {e.msg}") from None
    return parse_squares(doc)


# writing

def _namer(ids):
    """Injective string names for arbitrary hashable ids."""
    names = {x: compact(x) for x in ids}
    if len(set(names.values())) != len(names):
        names = {x: repr(x) for x in ids}
    return names


def dump_completions(d: SquaresCat, comp: CompletionData, hn, vn) -> dict:
    """Tabulate completion functions over every span/cospan and square."""
    def sq(s):
        return dict(zip(SQ_KEYS, (hn[s[0]], vn[s[1]], vn[s[2]], hn[s[3]])))

    out: dict = {"span": [], "span_action": [], "w": []}
    spans = [sp for sp in d.spans() if comp.span_complete(*sp) is not None]
    for f, u in spans:
        out["span"].append({"top": hn[f], "left": vn[u], "square": sq(comp.span_complete(f, u))})
    for s1 in spans:
        for s2 in spans:
            for m in d.span_morphisms(s1, s2):
                r = comp.span_action(s1, s2, m)
                if r is not None:
                    out["span_action"].append({"spans": [[hn[s1[0]], vn[s1[1]]], [hn[s2[0]], vn[s2[1]]]],
                                               "maps": [vn[x] for x in m], "result": vn[r]})
    for s in d.ordered_squares:
        r = comp.w(s)
        if r is not None:
            out["w"].append({"square": sq(s), "map": vn[r]})
    if comp.cospan_complete is None:
        return out
    out.update({"cospan": [], "cospan_action": [], "u": []})
    cospans = [cs for cs in d.cospans() if comp.cospan_complete(*cs) is not None]
    for v, g in cospans:
        out["cospan"].append({"right": vn[v], "bottom": hn[g], "square": sq(comp.cospan_complete(v, g))})
    for c1 in cospans:
        for c2 in cospans:
            for m in d.cospan_morphisms(c1, c2):
                r = comp.cospan_action(c1, c2, m)
                if r is not None:
                    out["cospan_action"].append({"cospans": [[vn[c1[0]], hn[c1[1]]], [vn[c2[0]], hn[c2[1]]]],
                                                 "maps": [vn[x] for x in m], "result": vn[r]})
    for s in d.ordered_squares:
        r = comp.u(s)
        if r is not None:
            out["u"].append({"square": sq(s), "map": vn[r]})
    return out


def dump_squares(d: SquaresCat, comp: CompletionData | None = None) -> dict:
    H, V = d.hcat, d.vcat
    on = _namer(d.objects)
    hn = _namer(H.morphisms)
    vn = _namer(V.morphisms)

    def mors(c, n):
        return [{"id": n[m], "src": on[a], "dst": on[b]} for m, (a, b) in
                ((m, c.morphisms[m]) for m in ordered(c.morphisms))]

    return {
        "name": d.name,
        "objects": [on[x] for x in d.objects],
        "hmor": mors(H, hn),
        "vmor": mors(V, vn),
        "hid": {on[x]: hn[H.ident(x)] for x in d.objects},
        "vid": {on[x]: vn[V.ident(x)] for x in d.objects},
        "hcomp": [[hn[g], hn[f], hn[gf]] for (g, f), gf in sorted(
            H.composition.items(), key=lambda kv: (hn[kv[0][0]], hn[kv[0][1]]))],
        "vcomp": [[vn[g], vn[f], vn[gf]] for (g, f), gf in sorted(
            V.composition.items(), key=lambda kv: (vn[kv[0][0]], vn[kv[0][1]]))],
        "squares": [dict(zip(SQ_KEYS, (hn[s[0]], vn[s[1]], vn[s[2]], hn[s[3]])))
                    for s in d.ordered_squares],
        "basepoint": on[d.basepoint],
    } | ({"completions": dump_completions(d, comp, hn, vn)} if comp is not None else {})


def write_squares(d: SquaresCat, path, comp: CompletionData | None = None):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dump_squares(d, comp), fh, indent=1, ensure_ascii=False)
        fh.write("\n")


# simplicial sets: {"bound", "levels": [[ids]], "faces": {"n,i": {x: y}}, "degens": {...}}

def parse_sset(doc: dict) -> TruncSSet:
    _keys(doc, ("bound", "levels", "faces", "degens", "name"), ("bound", "levels", "faces", "degens"), "")
    N = _expect(doc["bound"], int, "bound")
    levels = _expect(doc["levels"], list, "levels")
    if len(levels) != N + 1:
        _fail("levels", f"expected {N + 1} levels")

    def maps(key, count):
        out = {}
        block = _expect(doc[key], dict, key)
        for n, i in count:
            k = f"{n},{i}"
            if k not in block:
                _fail(f"{key}.{k}", "missing map")
            out[(n, i)] = dict(_expect(block[k], dict, f"{key}.{k}"))
        extra = sorted(set(block) - {f"{n},{i}" for n, i in count})
        if extra:
            _fail(f"{key}.{extra[0]}", "unknown key")
        return out

    faces = maps("faces", [(n, i) for n in range(1, N + 1) for i in range(n + 1)])
    degens = maps("degens", [(n, i) for n in range(N) for i in range(n + 1)])
    return TruncSSet(N, [list(l) for l in levels], faces, degens, doc.get("name", ""))


def dump_sset(x: TruncSSet) -> dict:
    names = _namer([s for l in x.levels for s in l])
    return {
        "name": x.name,
        "bound": x.bound,
        "levels": [[names[s] for s in l] for l in x.levels],
        "faces": {f"{n},{i}": {names[a]: names[b] for a, b in m.items()}
                  for (n, i), m in sorted(x.faces.items())},
        "degens": {f"{n},{i}": {names[a]: names[b] for a, b in m.items()}
                   for (n, i), m in sorted(x.degens.items())},
    }


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InterchangeError(f"line {e.lineno}: {e.msg}") from None
