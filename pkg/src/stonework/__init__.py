"""Finite Boolean algebras, ultrafilters, Stone representation and propositional completeness."""

from .algebra import (
    AxiomReport,
    FiniteAlgebra,
    PowerSetAlgebra,
    atoms,
    check_complement_uniqueness,
    check_de_morgan,
    check_homomorphism,
    is_isomorphism,
    two_element_algebra,
    verify_axioms,
)
from .completeness import find_model_via_ultrafilter, soundness_check
from .filters import (
    Filter,
    Ultrafilter,
    enumerate_ultrafilters,
    extend_to_ultrafilter,
    filter_generated_by,
    principal_filter,
)
from .lindenbaum import LTAlgebra, build_lt_algebra, class_of
from .logic import Theory, evaluate, parse, pretty, sat_oracle
from .stone import build_stone_representation, verify_stone_embedding

__all__ = [
    "AxiomReport", "FiniteAlgebra", "PowerSetAlgebra", "atoms", "check_complement_uniqueness",
    "check_de_morgan", "check_homomorphism", "is_isomorphism", "two_element_algebra", "verify_axioms",
    "find_model_via_ultrafilter", "soundness_check", "Filter", "Ultrafilter", "enumerate_ultrafilters",
    "extend_to_ultrafilter", "filter_generated_by", "principal_filter", "LTAlgebra", "build_lt_algebra",
    "class_of", "Theory", "evaluate", "parse", "pretty", "sat_oracle", "build_stone_representation",
    "verify_stone_embedding",
]
