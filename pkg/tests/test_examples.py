import pytest

from squarekit import examples as ex
from squarekit.catcore import poset_category, terminal_category, validate_category
from squarekit.double import validate_flat_double, validate_squares_category, weak_equivalences


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_finset_validates(n):
    d = ex.finset_squares(n)
    assert validate_squares_category(d).passed
    assert len(d.objects) == n + 1


def test_finset_hmors_are_injections():
    d = ex.finset_squares(3)
    # injections [a] -> [b]: b!/(b-a)!
    from math import perm
    assert len(d.hcat.morphisms) == sum(perm(b, a) for b in range(4) for a in range(b + 1))


def test_partial_monoid_counts(pm):
    assert (len(pm.objects), len(pm.hcat.morphisms), len(pm.squares)) == (2, 3, 4)
    assert pm.basepoint == "1"


def test_partial_monoid_squares_are_associativity_triples(pm):
    m = ex.pmonoid_1x()
    triples = [(c, a, b) for c in m.carrier for a in m.carrier for b in m.carrier
               if m.defined(c, a) and m.defined(m.mul(c, a), b) and m.defined(a, b)]
    assert len(triples) == len(pm.squares)


def test_trivial_partial_monoid():
    from squarekit.simplicial import PartialMonoid
    d = ex.partial_monoid_squares(PartialMonoid(["1"], "1", {("1", "1"): "1"}))
    assert len(d.objects) == 1 and validate_squares_category(d).passed


def test_single_edge_subgraphs(edge_graph):
    # ∅, {a}, {b}, {a,b} discrete, the edge
    assert len(edge_graph.objects) == 5
    assert validate_squares_category(edge_graph).passed


def test_ambient_guard():
    big = ex.GraphData(list(range(7)), [])
    with pytest.raises(ValueError):
        ex.graph_squares(1, big)


def test_graph_data_rejects_bad_edges():
    with pytest.raises(ValueError):
        ex.GraphData(["a"], [("a", "b")])
    with pytest.raises(ValueError):
        ex.GraphData(["a"], [("a", "a")])


@pytest.mark.parametrize("variant", [2, 3])
def test_labeled_graph_variants_validate(variant):
    d = ex.graph_squares(variant, 2)
    assert validate_squares_category(d).passed


def test_labeled_graph_subgraph_count():
    d = ex.graph_squares(2, 3)
    # graphs on {1..m}, m <= 3: 1 + 1 + 2 + 8
    assert len(d.objects) == 12
    assert validate_squares_category(d).passed


def test_variant3_has_more_morphisms_than_variant2():
    d2, d3 = ex.graph_squares(2, 2), ex.graph_squares(3, 2)
    assert set(d2.hcat.morphisms) < set(d3.hcat.morphisms)


@pytest.mark.parametrize("q,L", [(1, 0), (1, 2), (2, 1), (1, 3)])
def test_intervals_validate(q, L):
    d = ex.interval_polytopes(q, L)
    assert validate_squares_category(d).passed


def test_interval_objects_are_cell_subsets():
    d = ex.interval_polytopes(1, 2)
    # unions of the unit cells [0,1], [1,2] with at most one component: ∅, two cells, both
    assert len(d.objects) == 4
    assert () in d.objects


def test_path_category(z2path):
    assert (len(z2path.objects), len(z2path.hcat.morphisms), len(z2path.squares)) == (2, 4, 8)
    assert validate_squares_category(z2path).passed


def test_twisted_arrow_category_validates():
    c = poset_category([0, 1, 2], lambda a, b: a <= b)
    tw = ex.twisted_arrow_category(c)
    assert validate_category(tw).passed
    assert len(tw.objects) == len(c.morphisms)
    D, marked = ex.twisted_arrow_squares(terminal_category())
    assert len(D.objects) == 1 and validate_flat_double(D).passed


def test_variant2_weak_equivalences_are_isomorphisms():
    d = ex.graph_squares(2, 3)
    w = weak_equivalences(d)
    for C, ws in ((d.hcat, w.hweq), (d.vcat, w.vweq)):
        isos = {f for f in C.morphisms
                if any(C.compose(g, f) == C.ident(C.src(f)) and C.compose(f, g) == C.ident(C.dst(f))
                       for g in C.hom(C.dst(f), C.src(f)))}
        assert set(ws) == isos and len(isos) == 54
