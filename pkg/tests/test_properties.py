"""Property-based checks of the algebraic laws."""
import json

from hypothesis import given, settings
from hypothesis import strategies as st

from squarekit import examples as ex
from squarekit.catcore import build_category, poset_category, validate_category
from squarekit.interchange import dump_squares, parse_squares
from squarekit.k0 import IntMatrix, check_snf, k0_group, smith_normal_form
from squarekit.simplicial import (TruncSSet, check_segal, edgewise_subdivision, nerve,
                                  validate_truncated)

small_int = st.integers(min_value=-6, max_value=6)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return IntMatrix(draw(st.lists(st.lists(small_int, min_size=c, max_size=c),
                                   min_size=r, max_size=r)), c)


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_snf_invariants(a):
    assert check_snf(a, smith_normal_form(a)) == []


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_snf_deterministic(a):
    r1, r2 = smith_normal_form(a), smith_normal_form(a.copy())
    assert r1.D == r2.D and r1.U == r2.U and r1.V == r2.V


@given(matrices(4))
@settings(max_examples=60, deadline=None)
def test_snf_diagonal_invariant_under_transpose(a):
    t = IntMatrix([list(c) for c in zip(*a.rows)], a.nrows)
    assert smith_normal_form(a).diagonal == smith_normal_form(t).diagonal


@st.composite
def posets(draw):
    """Random partial orders on up to 4 elements, as the reflexive-transitive closure."""
    n = draw(st.integers(1, 4))
    rel = {(i, i) for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                rel.add((i, j))
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, e) in list(rel):
                if b == c and (a, e) not in rel:
                    rel.add((a, e))
                    changed = True
    return poset_category(range(n), lambda a, b: (a, b) in rel)


@given(posets())
@settings(max_examples=30, deadline=None)
def test_poset_nerves_are_1_and_2_segal(c):
    assert validate_category(c).passed
    x = nerve(c, 3)
    assert validate_truncated(x).passed
    s1 = check_segal(x, 1).passed
    s2 = check_segal(x, 2).passed
    assert s1 and s2
    # 1-Segal implies 2-Segal on every generated input
    assert (not s1) or s2


@given(st.integers(1, 4))
@settings(max_examples=4, deadline=None)
def test_cyclic_group_nerves(n):
    from squarekit.catcore import group_category
    c = group_category(range(n), lambda a, b: (a + b) % n, 0)
    x = nerve(c, 3)
    assert x.sizes() == [1, n, n ** 2, n ** 3]
    assert check_segal(x, 1).passed


def relabel_sset(x: TruncSSet, tag) -> TruncSSet:
    f = {s: (tag, s) for l in x.levels for s in l}
    return TruncSSet(x.bound, [[f[s] for s in l] for l in x.levels],
                     {k: {f[a]: f[b] for a, b in m.items()} for k, m in x.faces.items()},
                     {k: {f[a]: f[b] for a, b in m.items()} for k, m in x.degens.items()}, x.name)


@given(posets(), st.integers(0, 99))
@settings(max_examples=20, deadline=None)
def test_edgewise_subdivision_commutes_with_relabeling(c, tag):
    x = nerve(c, 3)
    a = edgewise_subdivision(relabel_sset(x, tag))
    b = relabel_sset(edgewise_subdivision(x), tag)
    assert a.levels == b.levels
    assert a.faces == b.faces and a.degens == b.degens


@given(st.permutations(["p", "q", "r"]))
@settings(max_examples=6, deadline=None)
def test_k0_invariant_under_relabeling(perm):
    d = ex.finset_squares(2)
    doc = dump_squares(d)
    names = dict(zip(doc["objects"], perm))
    text = json.dumps(doc)
    doc2 = json.loads(text)
    doc2["objects"] = [names[x] for x in doc["objects"]]
    for key in ("hmor", "vmor"):
        for m in doc2[key]:
            m["src"], m["dst"] = names[m["src"]], names[m["dst"]]
    for key in ("hid", "vid"):
        doc2[key] = {names[k]: v for k, v in doc[key].items()}
    doc2["basepoint"] = names[doc["basepoint"]]
    d2, _ = parse_squares(doc2)
    k1, k2 = k0_group(d), k0_group(d2)
    assert (k1.free_rank, k1.torsion) == (k2.free_rank, k2.torsion)
    for x in doc["objects"]:
        orig = next(o for o in d.objects if str(o) == x)
        assert k1.images[orig] == k2.images[names[x]]


@given(st.integers(0, 3))
@settings(max_examples=4, deadline=None)
def test_finset_k0_counts_cardinality(n):
    d = ex.finset_squares(n)
    k = k0_group(d)
    assert k.free_rank == (1 if n else 0)
    if n:
        assert all(k.images[x][0][0] == x for x in d.objects)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=4, unique=True))
@settings(max_examples=20, deadline=None)
def test_discrete_categories_validate(objs):
    c = build_category(objs, {("id", a): (a, a) for a in objs}, lambda a: ("id", a),
                       lambda g, f: g, "disc")
    assert validate_category(c).passed
    assert nerve(c, 2).sizes() == [len(objs)] * 3
