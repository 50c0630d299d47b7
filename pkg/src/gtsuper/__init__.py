"""Gelfand-Tsetlin tableau modules for the Lie superalgebra gl(m|n)."""

from .algebra import (
    BasisElement,
    Shape,
    Weight,
    bracket,
    is_dominant,
    is_essentially_typical,
    is_typical,
    l_to_weight,
    parity,
    presentation_relations,
    weight_to_l,
)
from .berezinian import berezinian_eigenvalue, berezinian_operator_truncated, eigenvalue_tuple
from .module import COVARIANT, TYPICAL, ModuleSpace, build_module, enumerate_basis, standard_module
from .relations import (
    RelationSet,
    SuperRelationSet,
    is_admissible,
    is_C_covariant,
    is_covariant_admissible,
    maximal_relation_set,
    reaches,
    rr_remove,
    satisfies_gl,
    satisfies_super,
)
from .tableau import Tableau
from .verify import (
    VerificationReport,
    brute_force_irreducible,
    check_defining_relations,
    irreducibility_criterion,
    kac_compare,
    run_suite,
)

__all__ = [
    "BasisElement",
    "COVARIANT",
    "ModuleSpace",
    "RelationSet",
    "Shape",
    "SuperRelationSet",
    "TYPICAL",
    "Tableau",
    "VerificationReport",
    "Weight",
    "berezinian_eigenvalue",
    "berezinian_operator_truncated",
    "bracket",
    "brute_force_irreducible",
    "build_module",
    "check_defining_relations",
    "eigenvalue_tuple",
    "enumerate_basis",
    "irreducibility_criterion",
    "is_C_covariant",
    "is_admissible",
    "is_covariant_admissible",
    "is_dominant",
    "is_essentially_typical",
    "is_typical",
    "kac_compare",
    "l_to_weight",
    "maximal_relation_set",
    "parity",
    "presentation_relations",
    "reaches",
    "rr_remove",
    "run_suite",
    "satisfies_gl",
    "satisfies_super",
    "standard_module",
    "weight_to_l",
]
