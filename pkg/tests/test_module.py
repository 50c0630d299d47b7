from fractions import Fraction

import pytest

from gtsuper.algebra import BasisElement, Shape, Weight, bracket
from gtsuper.berezinian import (
    BerezinianSeries,
    berezinian_eigenvalue,
    berezinian_operator_truncated,
    eigenvalue_tuple,
    highest_weight_scalar,
)
from gtsuper.linalg import SparseMatrix, supercommutator
from gtsuper.module import (
    COVARIANT,
    ActionError,
    build_module,
    generalized_factorial,
    module_from_json,
    standard_module,
)
from gtsuper.relations import RelationError, SuperRelationSet
from gtsuper.tableau import Shift, Tableau, apply_shift, h_eigenvalue, l_value, theta

GL11 = Shape(1, 1)


def tab(shape, rows):
    return Tableau.from_top_down(shape, rows)


def test_l_values():
    t = tab(GL11, [[1, 0], [1]])
    assert l_value(t, 2, 2) == 0
    assert l_value(t, 1, 1) == 1
    u = tab(Shape(1, 2), [[0, 0, -4], [0, 0], [0]])
    assert l_value(u, 3, 3) == 5


def test_theta():
    assert theta(tab(GL11, [[1, 0], [1]]), 1, 1) == 0
    assert theta(tab(GL11, [[1, 0], [0]]), 1, 1) == 1
    assert theta(tab(GL11, [[1, 0], [5]]), 1, 1) == -4


def test_shifts():
    t = tab(GL11, [[1, 0], [1]])
    up = Shift(1, 1, 1)
    assert apply_shift(t, up) == tab(GL11, [[1, 0], [2]])
    assert apply_shift(apply_shift(t, up), up.opposite()) == t
    with pytest.raises(IndexError):
        apply_shift(t, Shift(2, 1, 1))


def test_h_eigenvalues():
    t = tab(GL11, [[1, 0], [1]])
    assert (h_eigenvalue(t, 1), h_eigenvalue(t, 2)) == (1, 0)
    u = tab(GL11, [[1, 0], [0]])
    assert (h_eigenvalue(u, 1), h_eigenvalue(u, 2)) == (0, 1)
    v = tab(Shape(2, 2), [[5, 2, -1, -3], [4, 2, 0], [3, 1], [2]])
    assert sum(h_eigenvalue(v, k) for k in range(1, 5)) == 3


def test_generalized_factorial():
    assert [generalized_factorial(a) for a in (0, 1, -1, 3, -3)] == [1, 1, 1, 6, Fraction(1, 2)]


def test_gl11_basis():
    M = build_module(tab(GL11, [[1, 0], [1]]), SuperRelationSet.standard(1, 1))
    assert M.finite and len(M.basis) == 2


def test_gl21_typical_basis():
    M = standard_module(Weight([3, 1, -5]), Shape(2, 1))
    assert M.finite and len(M.basis) == 12


def test_infinite_module_is_truncated():
    # row 1 is unconstrained by an empty first part
    s = Shape(2, 1)
    seed = Tableau.from_l(s, [[Fraction(1, 3)], [Fraction(1, 2), Fraction(1, 5)], [Fraction(1, 2), Fraction(1, 5), Fraction(2, 7)]])
    C = SuperRelationSet.empty(2, 1)
    M = build_module(seed, C, cap=50)
    assert not M.finite and len(M.basis) >= 50
    ball = build_module(seed, C, radius=1)
    assert not ball.finite and ball.radius == 1


def test_seed_must_satisfy_relations():
    with pytest.raises(RelationError):
        build_module(tab(GL11, [[1, 0], [3]]), SuperRelationSet.standard(1, 1))


def test_raising_and_lowering_gl11():
    M = standard_module(Weight([1, 0]), GL11)
    low, high = tab(GL11, [[1, 0], [0]]), tab(GL11, [[1, 0], [1]])
    # frozen from the action formulas: both coefficients are 1 after normalization
    assert M.act_e(1, low) == {high: 1}
    assert M.act_f(1, high) == {low: 1}
    assert M.act_e(1, high) == {} and M.act_f(1, low) == {}
    assert M.act_h(2, high) == {}
    assert M.act_h(2, low) == {low: 1}


def test_atypical_lowering_vanishes():
    M = standard_module(Weight([0, 0]), GL11)
    top = tab(GL11, [[0, 0], [0]])
    assert M.act_f(1, top) == {}


@pytest.mark.parametrize("weight", [(3, 1, -5), (2, 0, -1)])
def test_highest_and_lowest_vectors(weight):
    M = standard_module(Weight(list(weight)), Shape(2, 1))
    top, bottom = max(M.basis, key=lambda t: t.weight_tuple()), min(M.basis, key=lambda t: t.weight_tuple())
    assert all(not M.act_e(k, top) for k in (1, 2))
    assert all(not M.act_f(k, bottom) for k in (1, 2))


def test_matrix_of_respects_bracket():
    s = Shape(2, 1)
    M = standard_module(Weight([3, 1, -5]), s)
    els = [BasisElement(i, j) for i in range(1, 4) for j in range(1, 4)]
    mats = {a: M.matrix_of(a) for a in els}
    size = len(M.basis)
    for a in els:
        for b in els:
            want = SparseMatrix(size, size)
            for c, coef in bracket(a, b, s).items():
                want = want + mats[c] * coef
            assert supercommutator(mats[a], mats[b], -1 if a.parity(s) and b.parity(s) else 1) == want, (a, b)


def test_composite_odd_bracket():
    s = Shape(2, 1)
    M = standard_module(Weight([3, 1, -5]), s)
    E = lambda i, j: M.matrix_of(BasisElement(i, j))  # noqa: E731
    assert E(1, 3) @ E(3, 1) + E(3, 1) @ E(1, 3) == E(1, 1) + E(3, 3)


def test_json_round_trip():
    M = standard_module(Weight([3, 1, -5]), Shape(2, 1))
    back = module_from_json(M.to_json())
    assert back.basis == M.basis
    data = M.to_json()
    data["basis"] = data["basis"][:-1]
    with pytest.raises(ValueError):
        module_from_json(data)


def test_singular_action_is_reported():
    # covariant gl(1|2), lambda = (1,0,0): the f2 coefficient has a vanishing denominator
    s = Shape(1, 2)
    M = standard_module(Weight([1, 0, 0]), s, mode=COVARIANT)
    assert len(M.basis) == 3
    with pytest.raises(ActionError):
        M.act_f(2, tab(s, [[1, 0, 0], [1, 0], [0]]))


# --- Berezinian --------------------------------------------------------------------


def test_berezinian_top_gl11():
    t = tab(GL11, [[1, 0], [1]])
    assert berezinian_eigenvalue(2, t).reduced().coefficients(3) == [1, 1, 0, 0]
    assert berezinian_eigenvalue(1, t) == BerezinianSeries((Fraction(1),))
    assert highest_weight_scalar(Weight([1, 0]), GL11).coefficients(3) == [1, 1, 0, 0]


def test_berezinian_tuples_gl11():
    M = standard_module(Weight([1, 0]), GL11)
    tuples = {tuple(str(s) for s in eigenvalue_tuple(t)) for t in M.basis}
    assert tuples == {("(1+0t)", "(1+1t)/(1+0t)"), ("(1+1t)", "(1+1t)/(1+0t)")}


def test_berezinian_operator_order_zero():
    M = standard_module(Weight([1, 0]), GL11)
    assert berezinian_operator_truncated(M, 0) == [SparseMatrix.identity(2)]


@pytest.mark.parametrize("weight,shape", [((1, 0), GL11), ((3, 1, -5), Shape(2, 1))])
def test_berezinian_operator_diagonal(weight, shape):
    M = standard_module(Weight(list(weight)), shape)
    coeffs = berezinian_operator_truncated(M, 2)
    for r, mat in enumerate(coeffs):
        for i, t in enumerate(M.basis):
            want = berezinian_eigenvalue(shape.total, t).coefficients(2)[r]
            row = {c: v for (a, c, v) in mat.entries() if a == i}
            assert row == ({i: want} if want else {})
