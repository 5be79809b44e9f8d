"""Soundness and completeness of propositional logic, run through ultrafilters.

Homomorphisms into the two-element algebra are numpy arrays of 0/1
indexed by the domain carrier.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import CARRIER_CAP, FiniteAlgebra, check_homomorphism, two_element_algebra
from .errors import ArgumentError, InvariantViolation, PreconditionError
from .filters import Filter, extend_to_ultrafilter, is_ultrafilter, unit_filter
from .lindenbaum import LTAlgebra, build_lt_algebra, class_of, consistency, projection
from .logic import (
    VAR_CAP,
    Assignment,
    Theory,
    Var,
    assignment_index,
    evaluate,
    format_assignment,
    pretty,
    sat_oracle,
)

TWO = two_element_algebra()


def characteristic_hom(A: FiniteAlgebra, U: Filter) -> np.ndarray:
    """χ_U: A → 2, with χ_U(x) = 1 iff x ∈ U."""
    if not is_ultrafilter(A, U.members):
        raise PreconditionError("characteristic homomorphism needs an ultrafilter")
    chi = np.zeros(A.size, dtype=np.int64)
    chi[sorted(U.members)] = 1
    return chi


def _empty_algebra_for(lt: LTAlgebra, cap: int) -> LTAlgebra:
    return build_lt_algebra(Theory((), lt.universe), cap=cap)


def assignment_to_hom(h: Assignment, lt_empty: LTAlgebra) -> np.ndarray:
    """The homomorphism B(∅) → 2 sending a class to 1 iff h is one of its models."""
    if lt_empty.theory.formulas:
        raise ArgumentError("assignment_to_hom works on the algebra of the empty theory")
    idx = assignment_index(h, lt_empty.universe)
    codes = np.arange(lt_empty.size, dtype=np.int64)
    return (codes >> idx) & 1


def hom_to_assignment(g, lt_empty: LTAlgebra) -> Assignment:
    """Read an assignment off a homomorphism B(∅) → 2 via the variable classes."""
    g = np.asarray(g)
    if not check_homomorphism(g, lt_empty.algebra, TWO):
        raise PreconditionError("not a homomorphism into the two-element algebra")
    return {v: bool(g[class_of(lt_empty, Var(v)).element]) for v in lt_empty.universe}


@dataclass(frozen=True)
class DiagramCheck:
    h: np.ndarray  # B(∅) → 2
    pi: np.ndarray  # B(∅) → B(T)
    h_tilde: Optional[np.ndarray]  # B(T) → 2
    h_is_hom: bool
    h_tilde_is_hom: bool
    commutes: bool

    @property
    def nontrivial_target(self) -> bool:
        """A homomorphism B(T) → 2 exists only when B(T) has distinct 0 and 1."""
        return self.h_tilde is not None and self.h_tilde_is_hom

    @property
    def passed(self) -> bool:
        return self.h_is_hom and self.h_tilde_is_hom and self.commutes


def soundness_check(
    T: Theory,
    h: Assignment,
    *,
    lt_empty: LTAlgebra | None = None,
    lt_t: LTAlgebra | None = None,
    cap: int = CARRIER_CAP,
) -> DiagramCheck:
    """Given a model h of T, build h̃: B(T) → 2 and check h = h̃ ∘ π on all of B(∅)."""
    if not T.is_model(h):
        raise PreconditionError(f"{format_assignment(h, T.universe)} is not a model of the theory")
    lt_t = lt_t or build_lt_algebra(T, cap=cap)
    lt_empty = lt_empty or _empty_algebra_for(lt_t, cap)
    idx = assignment_index(h, T.universe)
    try:
        j = lt_t.models.index(idx)
    except ValueError:
        raise InvariantViolation("a model of T is missing from the model list of B(T)") from None
    # h̃(c) = 1 iff h is among the models of c; well-defined since classes are model sets
    h_tilde = (np.arange(lt_t.size, dtype=np.int64) >> j) & 1
    pi = projection(lt_empty, lt_t)
    g = assignment_to_hom(h, lt_empty)
    return DiagramCheck(
        h=g,
        pi=pi,
        h_tilde=h_tilde,
        h_is_hom=check_homomorphism(g, lt_empty.algebra, TWO),
        h_tilde_is_hom=check_homomorphism(h_tilde, lt_t.algebra, TWO),
        commutes=bool(np.array_equal(g, h_tilde[pi])),
    )


@dataclass(frozen=True)
class Extraction:
    """Intermediate objects of the ultrafilter route to a model."""

    lt_t: LTAlgebra
    ultrafilter: Filter
    chi: np.ndarray  # B(T) → 2
    pi: np.ndarray
    h: np.ndarray  # χ ∘ π : B(∅) → 2
    model: Assignment


def extract_model(
    T: Theory, *, lt_empty: LTAlgebra | None = None, cap: int = CARRIER_CAP, var_cap: int = VAR_CAP
) -> Optional[Extraction]:
    lt_t = build_lt_algebra(T, cap=cap, var_cap=var_cap)
    if not consistency(lt_t):
        return None
    lt_empty = lt_empty or _empty_algebra_for(lt_t, cap)
    A = lt_t.algebra
    p = extend_to_ultrafilter(A, unit_filter(A))
    chi = characteristic_hom(A, p)
    pi = projection(lt_empty, lt_t)
    h = chi[pi]
    model = hom_to_assignment(h, lt_empty)
    failed = [f for f in T.formulas if not evaluate(f, model)]
    if failed:
        raise InvariantViolation(f"extracted assignment {format_assignment(model, T.universe)} falsifies part of T")
    return Extraction(lt_t, p, chi, pi, h, model)


def find_model_via_ultrafilter(
    T: Theory, *, lt_empty: LTAlgebra | None = None, cap: int = CARRIER_CAP, var_cap: int = VAR_CAP
) -> Optional[Assignment]:
    """A model of T obtained as χ_p ∘ π for an ultrafilter p of B(T), or None if T is inconsistent."""
    ex = extract_model(T, lt_empty=lt_empty, cap=cap, var_cap=var_cap)
    return None if ex is None else ex.model


def theory_verdict(T: Theory, *, lt_empty: LTAlgebra | None = None, cap: int = CARRIER_CAP) -> dict:
    """Run both directions on T and cross-check against the brute-force oracle."""
    lt_empty = lt_empty or build_lt_algebra(Theory((), T.universe), cap=cap)
    ex = extract_model(T, lt_empty=lt_empty, cap=cap)
    oracle = sat_oracle(T)
    verdict = {
        "theory": [pretty(f) for f in T.formulas],
        "consistent": ex is not None,
        "model": None,
        "model_satisfies": None,
        "diagram_commutes": None,
        "ultrafilter_route_matches_model": None,
        "oracle_consistent": oracle is not None,
        "oracle_agrees": (ex is not None) == (oracle is not None),
    }
    if ex is not None:
        diagram = soundness_check(T, ex.model, lt_empty=lt_empty, lt_t=ex.lt_t, cap=cap)
        verdict["model"] = format_assignment(ex.model, T.universe)
        verdict["model_satisfies"] = T.is_model(ex.model)
        verdict["diagram_commutes"] = diagram.passed
        verdict["ultrafilter_route_matches_model"] = bool(np.array_equal(ex.h, diagram.h))
    return verdict
