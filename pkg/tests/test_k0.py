import random

import pytest

from squarekit import examples as ex
from squarekit.double import extension_category, trivial_squares_category
from squarekit.k0 import (IntMatrix, check_k0_additivity, check_snf, check_sum_existence,
                          k0_class_equal, k0_group, relation_matrix, smith_normal_form)

from oracles import hermite_rows, primitive_functional, quotient_is_torsion_free, relation_rows


def test_snf_identity():
    r = smith_normal_form(IntMatrix.identity(3))
    assert r.D == IntMatrix.identity(3)


def test_snf_diag_2_3():
    r = smith_normal_form(IntMatrix([[2, 0], [0, 3]]))
    assert r.diagonal == [1, 6]
    assert not check_snf(IntMatrix([[2, 0], [0, 3]]), r)


@pytest.mark.parametrize("rows", [[[0, 0], [0, 0]], [[4]], [[0, 6, 4]], [[2], [4], [6]],
                                  [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]])
def test_snf_small_cases(rows):
    a = IntMatrix(rows)
    assert check_snf(a, smith_normal_form(a)) == []


def test_snf_known_invariants():
    # classic example with invariant factors 2, 6, 12
    a = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert smith_normal_form(a).diagonal == [2, 6, 12]


def test_snf_rectangular_random():
    rng = random.Random(7)
    for _ in range(60):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        a = IntMatrix([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        assert check_snf(a, smith_normal_form(a)) == []


def test_det():
    assert IntMatrix([[1, 2], [3, 4]]).det() == -2
    assert IntMatrix([[0, 1], [1, 0]]).det() == -1
    assert IntMatrix([[2, 0, 0], [0, 3, 0], [0, 0, 0]]).det() == 0


def test_k0_trivial():
    k = k0_group(trivial_squares_category())
    assert k.free_rank == 0 and k.torsion == ()


def test_k0_finset(finset2):
    k = k0_group(finset2)
    assert (k.free_rank, k.torsion) == (1, ())
    assert {x: k.images[x][0][0] for x in finset2.objects} == {0: 0, 1: 1, 2: 2}
    assert k.describe() == "free rank 1, torsion none, [2] = 2·[1]"


def test_k0_finset_against_hermite_oracle(finset2):
    objs, rows = relation_rows(finset2)
    h = hermite_rows(rows)
    assert len(objs) - len(h) == 1
    assert quotient_is_torsion_free(h)
    phi = primitive_functional(h, len(objs))
    val = dict(zip(objs, phi))
    assert val[2] == 2 * val[1] and abs(val[1]) == 1


def test_k0_partial_monoid(pm):
    k = k0_group(pm)
    assert (k.free_rank, k.torsion) == (1, ())
    assert abs(k.images["x"][0][0]) == 1
    assert not k0_class_equal(pm, ["x"], {})
    assert k0_class_equal(pm, ["1"], {})


def test_class_equal_finset(finset2):
    assert k0_class_equal(finset2, {2: 1}, {1: 2})
    assert k0_class_equal(finset2, [0], [])
    assert not k0_class_equal(finset2, [2], [1])
    with pytest.raises(KeyError):
        k0_class_equal(finset2, ["nope"], [])


@pytest.mark.parametrize("build", [lambda: ex.finset_squares(3),
                                   lambda: ex.interval_polytopes(1, 2),
                                   lambda: ex.graph_squares(1, ex.single_edge()),
                                   lambda: ex.path_double_category(ex.z2_nerve(4))])
def test_every_square_relation_holds(build):
    d = build()
    k = k0_group(d)
    for sq in d.squares:
        A, B, C, D = d.corners(sq)
        assert k0_class_equal(d, [A, D], [B, C], k)


def test_relation_matrix_dedupes(finset2):
    objs, R = relation_matrix(finset2)
    assert len(set(map(tuple, R.rows))) == R.nrows
    assert R.nrows < len(finset2.squares)


def test_sum_existence():
    assert check_sum_existence(trivial_squares_category()).passed
    r = check_sum_existence(ex.finset_squares(1))
    assert not r.passed and r.violations == ["no sum for (1, 1)"]
    assert check_sum_existence(ex.finset_squares(3), lambda a, b: a + b <= 3).passed


def test_additivity_partial_monoid(pm):
    assert check_k0_additivity(pm).passed


def test_additivity_trivial():
    r = check_k0_additivity(trivial_squares_category())
    assert r.passed


def test_additivity_finset(finset2):
    r = check_k0_additivity(finset2, extension_category(finset2))
    assert r.passed, r.text()
