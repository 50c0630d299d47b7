import random
from fractions import Fraction

import pytest

from gtsuper.algebra import Shape, Weight
from gtsuper.module import COVARIANT, build_module, standard_module
from gtsuper.relations import RelationError, SuperRelationSet, is_maximal_for, rr_remove
from gtsuper.sampling import even_zero_counterexample, random_pair, random_seed
from gtsuper.tableau import Tableau
from gtsuper.verify import (
    FAIL,
    PASS,
    UNDECIDED,
    brute_force_irreducible,
    check_berezinian,
    check_defining_relations,
    check_gl11_identity,
    check_gl12_commutator,
    check_separation,
    corrupt_coefficient,
    dumps_reports,
    g1_invariants,
    gl12_nonvanishing_witness,
    irreducibility_criterion,
    kac_compare,
    mutation_selftest,
    run_suite,
)

GL11 = Shape(1, 1)


def std(weight, shape):
    return standard_module(Weight(list(weight)), shape)


def test_relations_pass_on_typical_module():
    assert check_defining_relations(std((3, 1, -5), Shape(2, 1))).status == PASS


def test_relations_pass_on_random_gl22():
    rng = random.Random(11)
    seed = None
    while seed is None:
        C = random_pair(Shape(2, 2), rng)
        seed = random_seed(C, rng)
    M = build_module(seed, C, radius=2)
    assert check_defining_relations(M).status == PASS


def test_corrupted_coefficient_is_caught():
    M = std((3, 1, -5), Shape(2, 1))
    corrupt_coefficient(M, "e", 1)
    report = check_defining_relations(M)
    assert report.status == FAIL and report.witnesses


def test_even_zero_counterexample():
    """A zero-class pair on row m of the first part breaks a relation on a generic seed."""
    C, seed = even_zero_counterexample()
    M = build_module(seed, C, radius=2)
    report = check_defining_relations(M)
    assert report.status == FAIL
    assert report.witnesses[0]["relation"].startswith("[e2,f2]")


def test_irreducibility_gl11():
    assert irreducibility_criterion(std((1, 0), GL11))
    assert brute_force_irreducible(std((1, 0), GL11))
    assert not irreducibility_criterion(std((0, 0), GL11))
    assert not brute_force_irreducible(std((0, 0), GL11))


def test_rr_reduced_set_rejects_integral_seed():
    """After a removal the freed vertex is in its own component, so an integral seed no longer satisfies the set."""
    seed = Tableau.highest(Weight([3, 1, -5]), Shape(2, 1))
    C = rr_remove(SuperRelationSet.standard(2, 1), (2, 1))
    assert not is_maximal_for(C, seed)
    with pytest.raises(RelationError):
        build_module(seed, C, radius=2)


def test_g1_invariants_gl11():
    M = std((1, 0), GL11)
    inv = g1_invariants(M)
    assert inv["dim"] == 1 and inv["equals_theta_zero_span"]
    assert [M.basis[i] for i in inv["theta_zero"]] == [Tableau.from_top_down(GL11, [[1, 0], [1]])]


def test_kac():
    assert kac_compare(std((1, 0), GL11)).status == PASS
    assert kac_compare(std((3, 1, -5), Shape(2, 1))).status == PASS
    assert kac_compare(std((3, 1, -5), Shape(2, 1)), perturb=True).status == FAIL


@pytest.mark.parametrize(
    "weight,relations",
    [((1, 0), "standard"), ((0, 0), "standard"), ((Fraction(2, 3), Fraction(-1, 5)), "empty")],
)
def test_gl11_identity(weight, relations):
    seed = Tableau.highest(Weight(list(weight)), GL11)
    M = build_module(seed, getattr(SuperRelationSet, relations)(1, 1))
    assert check_gl11_identity(M).status == PASS


def test_gl12_identity_sign():
    M = std((3, 0, -1), Shape(1, 2))
    literal = check_gl12_commutator(M)
    assert literal.status == FAIL and literal.witnesses[0]["opposite_sign_holds"]
    reverse = check_gl12_commutator(M, reverse=True)
    assert reverse.status == PASS and reverse.details["nonzero"]


def test_gl12_trivial_module():
    M = standard_module(Weight([0, 0, 0]), Shape(1, 2), mode=COVARIANT)
    assert len(M.basis) == 1
    assert check_gl12_commutator(M).status == PASS
    assert not check_gl12_commutator(M).details["nonzero"]


def test_gl12_witness_search():
    modules = [std(w, Shape(1, 2)) for w in [(2, 1, 1), (3, 0, -1)]]
    found = gl12_nonvanishing_witness(modules)
    assert found is not None and len(found.basis) <= 64


def test_separation():
    M = std((3, 1, -5), Shape(2, 1))
    assert check_separation(M).status == PASS
    assert check_separation(M, basis=list(M.basis) + [M.basis[0]]).status == FAIL


def test_berezinian_check():
    assert check_berezinian(std((3, 1, -5), Shape(2, 1))).status == PASS


def test_mutation_selftest():
    assert mutation_selftest(std((1, 0), GL11)).status == PASS


def test_run_suite_infinite_is_undecided():
    seed = Tableau.from_l(
        Shape(2, 1), [[Fraction(1, 3)], [Fraction(1, 2), Fraction(1, 5)], [Fraction(1, 2), Fraction(1, 5), Fraction(2, 7)]]
    )
    M = build_module(seed, SuperRelationSet.empty(2, 1), radius=2)
    assert not M.finite
    statuses = {r.check: r.status for r in run_suite(M)}
    assert statuses["relations"] == PASS
    assert statuses["irreducibility"] == UNDECIDED


def test_reports_are_deterministic():
    M = std((2, 0, -1), Shape(2, 1))
    first = dumps_reports(run_suite(M, seed=5))
    second = dumps_reports(run_suite(std((2, 0, -1), Shape(2, 1)), seed=5))
    assert first == second
