"""Lindenbaum-Tarski algebras of finite theories over a finite universe.

Two formulas are identified when they agree in every model of the
theory, so a class is determined by the set of models it is true in.
Classes are stored that way: element ``c`` of the algebra is a bitmask
over the theory's model list (bit ``j`` stands for ``models[j]``), which
makes B(T) literally the power-set algebra of Mod(T).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .algebra import CARRIER_CAP, FiniteAlgebra, PowerSetAlgebra
from .errors import ArgumentError, SizeError
from .logic import (
    VAR_CAP,
    And,
    Formula,
    Not,
    Or,
    Theory,
    Var,
    assignment_from_index,
    truth_mask,
)


@dataclass(frozen=True)
class EquivClass:
    """[α]: the models of T in which α holds (global assignment indices)."""

    model_set: frozenset[int]
    element: int
    representative: Formula | None = field(default=None, compare=False)


@dataclass(frozen=True, eq=False)
class LTAlgebra:
    theory: Theory
    models: tuple[int, ...]  # canonical assignment indices of the models of T, ascending
    algebra: FiniteAlgebra = field(repr=False)

    @property
    def universe(self) -> tuple[str, ...]:
        return self.theory.universe

    @property
    def size(self) -> int:
        return self.algebra.size

    def model_set(self, element: int) -> frozenset[int]:
        self.algebra.check(element)
        return frozenset(m for j, m in enumerate(self.models) if element >> j & 1)

    def element_of(self, model_set) -> int:
        pos = {m: j for j, m in enumerate(self.models)}
        code = 0
        for m in model_set:
            if m not in pos:
                raise ArgumentError(f"assignment {m} is not a model of the theory")
            code |= 1 << pos[m]
        return code

    def class_of(self, alpha: Formula) -> EquivClass:
        return class_of(self, alpha)

    def to_dict(self) -> dict:
        return {
            "universe": list(self.universe),
            "models": [assignment_from_index(m, self.universe) for m in self.models],
            "carrier_size": self.size,
            "consistent": consistency(self),
        }


def _model_indices(T: Theory) -> tuple[int, ...]:
    rows = 1 << len(T.universe)
    mask = reduce(lambda acc, f: acc & truth_mask(f, T.universe), T.formulas, (1 << rows) - 1)
    return tuple(i for i in range(rows) if mask >> i & 1)


def build_lt_algebra(T: Theory, *, cap: int = CARRIER_CAP, var_cap: int = VAR_CAP) -> LTAlgebra:
    """Materialize B(T) as the algebra of subsets of the model list of T."""
    if len(T.universe) > var_cap:
        raise SizeError(f"{len(T.universe)} variables exceed the cap of {var_cap}")
    models = _model_indices(T)
    if 2 ** len(models) > cap:
        raise SizeError(f"B(T) would have 2^{len(models)} elements, cap is {cap}")
    algebra = PowerSetAlgebra(tuple(str(m) for m in models)).materialize(cap)
    return LTAlgebra(T, models, algebra)


def class_of(lt: LTAlgebra, alpha: Formula) -> EquivClass:
    mask = truth_mask(alpha, lt.universe)
    element = 0
    for j, m in enumerate(lt.models):
        if mask >> m & 1:
            element |= 1 << j
    return EquivClass(lt.model_set(element), element, alpha)


def projection(lt_empty: LTAlgebra, lt_t: LTAlgebra) -> np.ndarray:
    """π: B(∅) → B(T), restricting each model set to the models of T."""
    if lt_empty.universe != lt_t.universe:
        raise ArgumentError("projection needs both algebras over the same universe")
    if lt_empty.theory.formulas:
        raise ArgumentError("projection source must be the algebra of the empty theory")
    codes = np.arange(lt_empty.size, dtype=np.int64)
    # in B(∅) the model list is every assignment, so bit m of a code is assignment m
    image = np.zeros_like(codes)
    for j, m in enumerate(lt_t.models):
        image |= ((codes >> m) & 1) << j
    return image


def consistency(lt: LTAlgebra) -> bool:
    return not lt.algebra.is_trivial


def representative_formula(lt: LTAlgebra, c: EquivClass | int) -> Formula:
    """A formula in the class: DNF over its models, with fixed forms for 0 and 1."""
    element = c.element if isinstance(c, EquivClass) else c
    lt.algebra.check(element)
    if not lt.universe:
        raise ArgumentError("an empty universe has no formulas")
    first = Var(lt.universe[0])
    if element == lt.algebra.one:
        return Or(first, Not(first))
    if element == lt.algebra.zero:
        return And(first, Not(first))
    disjuncts = []
    for m in sorted(lt.model_set(element)):
        h = assignment_from_index(m, lt.universe)
        literals = [Var(v) if h[v] else Not(Var(v)) for v in lt.universe]
        disjuncts.append(reduce(And, literals))
    return reduce(Or, disjuncts)

