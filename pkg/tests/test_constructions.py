from math import factorial

import pytest

from squarekit import examples as ex
from squarekit.catcore import group_category, is_groupoid, poset_category, terminal_category
from squarekit.constructions import (check_strict_1segal, comparison_witnesses, double_nerve_diag,
                                     forgetful_equivalence, hv_face, hv_level, ob_s,
                                     s_simplicial, staircase_objects, t_plus_simplicial,
                                     t_simplicial)
from squarekit.diagrams import (coface, codegeneracy, enumerate_diagrams, grid_shape,
                                is_diagram_morphism, row_shape, staircase_shape)
from squarekit.double import trivial_squares_category, weak_equivalences
from squarekit.simplicial import (check_segal, check_sset_isomorphism, edgewise_subdivision,
                                  find_sset_isomorphism, nerve, nerve_partial_monoid,
                                  validate_truncated)


def test_cosimplicial_maps():
    assert [coface(3, 1)(k) for k in range(3)] == [0, 2, 3]
    assert [codegeneracy(2, 1)(k) for k in range(4)] == [0, 1, 1, 2]


def test_shapes():
    assert len(staircase_shape(2).positions) == 6
    assert len(staircase_shape(2).cells) == 1
    assert len(grid_shape(2).cells) == 4
    assert row_shape(3).cells == []


def test_trivial_category_gives_points():
    d = trivial_squares_category()
    for sc in (t_simplicial(d, 3), s_simplicial(d, 3)):
        assert all(len(c.objects) == 1 and len(c.morphisms) == 1 for c in sc.levels)
    assert double_nerve_diag(d, 3).sizes() == [1, 1, 1, 1]


def test_t_levels_finset(finset1, finset2):
    assert len(t_simplicial(finset1, 1).levels[1].objects) == 3
    T = t_simplicial(finset2, 3)
    assert [len(c.objects) for c in T.levels] == [3, 8, 19, 42]
    assert validate_truncated(T).passed


def test_t_strict_1segal(finset2, pm):
    for d in (finset2, pm):
        assert check_strict_1segal(t_simplicial(d, 3), levels=(2, 3)).passed


def test_s_levels_finset(finset2):
    S = s_simplicial(finset2, 3)
    assert [len(c.objects) for c in S.levels] == [1, 3, 9, 30]
    assert validate_truncated(S).passed
    assert all(is_groupoid(c)[0] for c in S.levels)


def test_s2_count_matches_complement_count(finset2):
    # pairs (A ↣ B, B ↠ C) with C the complement: for |A|=a <= |B|=b there are
    # b!/(b-a)! injections and (b-a)! identifications of the complement
    expected = sum(factorial(b) // factorial(b - a) * factorial(b - a)
                   for b in range(3) for a in range(b + 1))
    assert len(staircase_objects(finset2, 2)) == expected == 9


def test_s1_is_the_vertical_weq_groupoid(finset2):
    S1 = s_simplicial(finset2, 1).levels[1]
    w = weak_equivalences(finset2)
    assert len(S1.objects) == len(finset2.objects)
    assert len(S1.morphisms) == len(w.vweq)


def test_staircase_morphisms_are_checked(finset2):
    sh = staircase_shape(2)
    X = enumerate_diagrams(finset2, sh)[4]
    ids = tuple(finset2.vcat.ident(x) for x in X[0])
    assert is_diagram_morphism(finset2, sh, X, X, ids)


def test_t_plus_validates(pm):
    assert validate_truncated(t_plus_simplicial(pm, 2)).passed


def test_double_nerve_level1_counts_squares(pm):
    x = double_nerve_diag(pm, 2)
    assert x.sizes()[1] == len(pm.squares) == 4
    assert validate_truncated(x).passed


def test_partial_monoid_double_nerve_is_sd(pm):
    x = double_nerve_diag(pm, 2)
    y = edgewise_subdivision(nerve_partial_monoid(ex.pmonoid_1x(), 5))
    iso = find_sset_isomorphism(x, y)
    assert iso is not None
    assert check_sset_isomorphism(x, y, iso).passed


@pytest.mark.parametrize("c", [
    terminal_category(),
    poset_category([0, 1], lambda a, b: a <= b, "[1]"),
    poset_category([0, 1, 2], lambda a, b: a <= b, "[2]"),
    group_category([0, 1], lambda a, b: (a + b) % 2, 0, "Z2"),
])
def test_twisted_arrow_double_nerve_is_sd(c):
    D, marked = ex.twisted_arrow_squares(c)
    assert len(D.objects) == len(c.morphisms)
    x = double_nerve_diag(D, 2)
    y = edgewise_subdivision(nerve(c, 5))
    iso = find_sset_isomorphism(x, y)
    assert iso is not None and check_sset_isomorphism(x, y, iso).passed


def test_path_round_trip(z2path):
    X = ex.z2_nerve(4)
    o = ob_s(z2path, 3)
    iso = find_sset_isomorphism(o, X.truncate(3))
    assert iso is not None and check_sset_isomorphism(o, X.truncate(3), iso).passed
    assert check_segal(o, 2).passed


def test_path_rejects_unreduced_input():
    # the nerve of a poset with two objects is not reduced
    with pytest.raises(ValueError, match="not reduced"):
        ex.path_double_category(nerve(poset_category([0, 1], lambda a, b: a <= b), 3))


@pytest.mark.parametrize("target", ["H", "V"])
@pytest.mark.parametrize("n", [1, 2])
def test_forgetful_equivalences(finset2, n, target):
    assert forgetful_equivalence(finset2, finset2.completion, n, target).passed


def test_modified_faces_are_functors(finset2):
    comp = finset2.completion
    for direction in ("H", "V"):
        lvl, lower = hv_level(finset2, comp, 2, direction), hv_level(finset2, comp, 1, direction)
        assert hv_face(finset2, comp, lvl, lower).validate().passed


@pytest.mark.parametrize("n", [1, 2])
def test_comparison_witnesses(finset2, n):
    r = comparison_witnesses(finset2, finset2.completion, n)
    assert r.passed, r.text()


def test_comparison_without_completions_is_incomplete(finset2):
    from squarekit.double import SquaresCat
    r = comparison_witnesses(SquaresCat(finset2.base, 0), None, 1)
    assert not r.passed and r.incomplete
