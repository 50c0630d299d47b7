import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtsuper.algebra import Shape, Weight
from gtsuper.module import COVARIANT, standard_module
from gtsuper.relations import (
    RelationError,
    RelationSet,
    SuperRelationSet,
    admissibility_report,
    extremal_vertices,
    in_F,
    indecomposable_components,
    is_admissible,
    is_C_covariant,
    is_covariant_admissible,
    is_maximal_for,
    is_noncritical,
    is_reduced,
    maximal_relation_set,
    random_admissible,
    reaches,
    rr_remove,
    satisfies_gl,
    satisfies_super,
    standard_relations,
)
from gtsuper.tableau import Tableau


def rs(n, *pairs, offset=0):
    return RelationSet(n, frozenset(pairs), offset)


def test_reaches():
    assert not reaches(RelationSet(2), (1, 1), (1, 1))
    C = rs(2, ((2, 1), (1, 1)))
    assert reaches(C, (2, 1), (1, 1))
    assert not reaches(C, (1, 1), (2, 1))
    chain = rs(3, ((3, 1), (2, 1)), ((2, 1), (1, 1)))
    assert reaches(chain, (3, 1), (1, 1))


def _gt_patterns(top):
    """Integral patterns below ``top`` as l-rows (row 1 first)."""
    if len(top) == 1:
        yield [top]
        return
    ranges = [range(top[i + 1], top[i] + 1) for i in range(len(top) - 1)]
    for row in product(*ranges):
        for below in _gt_patterns(list(row)):
            yield below + [top]


def _l(rows):
    return [[Fraction(x - i) for i, x in enumerate(row)] for row in rows]


def test_standard_set_matches_interlacing():
    # every classical pattern satisfies the betweenness set and nothing else does
    C = standard_relations(3)
    top = [3, 1, 0]
    good = {tuple(map(tuple, p)) for p in _gt_patterns(top)}
    for rows in product(*(range(-1, 5) for _ in range(3))):
        lam = [[rows[0]], [rows[1], rows[2]], top]
        inside = (tuple(lam[0]),) in {(p[0],) for p in good} and tuple(map(tuple, lam)) in good
        assert satisfies_gl(_l(lam), C) == inside


def test_satisfies_gl_component_integrality():
    C = rs(2, ((2, 1), (1, 1)))
    assert satisfies_gl([[Fraction(0)], [Fraction(1), Fraction(1, 2)]], C)
    assert not satisfies_gl([[Fraction(1, 3)], [Fraction(1), Fraction(1, 2)]], C)
    generic = [[Fraction(1, 7)], [Fraction(2, 3), Fraction(1, 5)]]
    assert satisfies_gl(generic, RelationSet(2))


def test_noncritical():
    assert is_noncritical(standard_relations(3))
    assert is_noncritical(RelationSet(3))
    # (2,1) and (2,2) both sit below (3,1) and may coincide
    assert not is_noncritical(rs(3, ((3, 1), (2, 1)), ((3, 1), (2, 2))))


def test_reduced():
    assert not is_reduced(rs(2, ((1, 1), (2, 1)), ((1, 1), (2, 2))))
    assert is_reduced(standard_relations(2))
    implied = rs(2, ((2, 1), (1, 1)), ((1, 1), (2, 2)), ((2, 1), (2, 2)))
    assert not is_reduced(implied)


def test_components():
    assert indecomposable_components(RelationSet(3)) == []
    two = rs(3, ((2, 1), (1, 1)), ((3, 3), (2, 2)))
    assert len(indecomposable_components(two)) == 2
    assert len(indecomposable_components(standard_relations(3))) == 1


def test_family_F():
    assert in_F(standard_relations(3))
    # adjoining pair (2,1), (2,2) joined only through row 1
    lacking = rs(3, ((2, 1), (1, 1)), ((1, 1), (2, 2)))
    assert not in_F(lacking)
    assert any("(iv)" in msg for msg in admissibility_report(lacking))
    assert in_F(rs(3, ((2, 1), (3, 2))))


def test_admissible():
    assert is_admissible(RelationSet(3))
    assert is_admissible(standard_relations(3))
    assert not is_admissible(rs(2, ((1, 1), (2, 1)), ((1, 1), (2, 2))))


def test_cross_pattern_reported():
    cross = rs(3, ((2, 1), (3, 2)), ((3, 1), (2, 2)), ((2, 2), (1, 1)), ((1, 1), (2, 1)))
    assert any("condition (ii)" in msg for msg in admissibility_report(cross))


def test_rr_remove_top_vertex():
    C = standard_relations(3)
    out = rr_remove(C, (3, 1))
    assert is_admissible(out) and len(out) < len(C)


def test_rr_remove_interior_vertex_rejected():
    with pytest.raises(RelationError):
        rr_remove(standard_relations(3), (2, 1))


def test_rr_iterates_to_empty():
    C = standard_relations(3)
    steps = 0
    while len(C):
        C = rr_remove(C, extremal_vertices(C)[0])
        steps += 1
        assert steps <= 6
    assert C == RelationSet(3)


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_rank_two_rr_preserves_admissibility(seed):
    rng = random.Random(seed)
    C = random_admissible(2, rng)
    for v in extremal_vertices(C):
        assert is_admissible(rr_remove(C, v, check=False))


def test_rr_counterexample_rank_three():
    """Removing an extremal vertex can break the adjoining-pair condition on a 3-row triangle."""
    C = rs(
        3,
        ((1, 1), (2, 1)),
        ((2, 1), (3, 1)),
        ((2, 2), (1, 1)),
        ((3, 2), (2, 2)),
    )
    assert is_admissible(C)
    assert (3, 1) in extremal_vertices(C)
    out = rr_remove(C, (3, 1), check=False)
    assert any("(iv)" in msg for msg in admissibility_report(out))
    with pytest.raises(AssertionError):
        rr_remove(C, (3, 1))


def test_satisfies_super_standard():
    s = Shape(1, 1)
    C = SuperRelationSet.standard(1, 1)
    assert satisfies_super(Tableau.from_top_down(s, [[1, 0], [1]]), C)
    assert not satisfies_super(Tableau.from_top_down(s, [[1, 0], [3]]), C)


def test_satisfies_super_mixed_collision():
    # l(2,1) - l(2,2) integral and reachable to zero by shifting row 2
    s = Shape(1, 2)
    t = Tableau.from_l(s, [[Fraction(1, 2)], [Fraction(3), Fraction(2)], [Fraction(5), Fraction(-1), Fraction(4)]])
    assert not satisfies_super(t, SuperRelationSet.empty(1, 2))


def test_maximal_relation_set():
    s = Shape(2, 1)
    t = Tableau.highest(Weight([3, 1, -5]), s)
    assert maximal_relation_set(t) == SuperRelationSet.standard(2, 1)
    # theta = 0 everywhere, all other differences non-integral
    generic = Tableau.from_top_down(s, [[Fraction(3, 4), Fraction(2, 9), Fraction(5, 11)], [Fraction(3, 4), Fraction(2, 9)], [Fraction(1, 7)]])
    assert maximal_relation_set(generic) == SuperRelationSet.empty(2, 1)


def test_maximal_for_rejects_smaller_set():
    t = Tableau.highest(Weight([3, 1, -5]), Shape(2, 1))
    C = SuperRelationSet.standard(2, 1)
    smaller = rr_remove(C, (2, 1))
    assert is_maximal_for(C, t)
    assert not is_maximal_for(smaller, t)


def test_covariant_admissible():
    assert is_covariant_admissible(SuperRelationSet.standard(2, 1))
    C = SuperRelationSet.standard(1, 2)
    assert is_covariant_admissible(C)
    # an empty second part is covariant admissible with p = m + n
    assert is_covariant_admissible(C.replace(c2=RelationSet(2, offset=1)))
    # (3,3) tied to row 2: neither p = 2 (chain missing) nor p = 3 works
    assert not is_covariant_admissible(C.replace(c2=rs(2, ((3, 3), (2, 2)), offset=1)))
    # chain present, but its component holds (4,2) without (4,3)
    unsaturated = rs(3, ((2, 2), (3, 3)), ((3, 3), (4, 4)), ((4, 2), (3, 3)), offset=1)
    assert is_admissible(unsaturated)
    assert not is_covariant_admissible(SuperRelationSet(1, 3, RelationSet(1), unsaturated))


def test_covariant_tableaux():
    s = Shape(1, 1)
    M = standard_module(Weight([1, 1]), s, mode=COVARIANT)
    C = M.relations
    assert all(is_C_covariant(t, C) for t in M.basis)
    # l(2,1) = l(2,2): theta(1,1) must vanish
    assert is_C_covariant(Tableau.from_top_down(s, [[1, -1], [1]]), C)
    assert not is_C_covariant(Tableau.from_top_down(s, [[1, -1], [0]]), C)


def test_covariant_corner_bound():
    s = Shape(2, 1)
    C = SuperRelationSet.standard(2, 1)
    assert is_C_covariant(Tableau.highest(Weight([1, 0, 0]), s), C)
    # one below the bound on l(3,2)
    assert not is_C_covariant(Tableau.highest(Weight([1, -1, 0]), s), C)
