"""Theory corpora for exercising the completeness pipeline end to end."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from .lindenbaum import build_lt_algebra
from .logic import And, Formula, Iff, Implies, Not, Or, Theory, Var, depth, truth_mask
from .completeness import theory_verdict

DEFAULT_UNIVERSE = ("P", "Q", "R")
DEFAULT_SEED = 20240611
_BINARY = (And, Or, Implies, Iff)


def formulas_by_class(V: Sequence[str] = DEFAULT_UNIVERSE, max_depth: int = 3) -> list[Formula]:
    """One shallowest representative per truth table among all formulas of depth ≤ max_depth.

    The truth table of a compound formula depends only on the tables of
    its parts, so combining representatives level by level reaches
    exactly the classes a full enumeration would, without the blow-up.
    """
    V = tuple(V)
    full = (1 << (1 << len(V))) - 1
    reps: dict[int, Formula] = {}
    for v in V:
        reps.setdefault(truth_mask(Var(v), V), Var(v))
    for _ in range(max_depth):
        current = list(reps.items())
        found = {}
        for m, f in current:
            found.setdefault(full ^ m, Not(f))
        for (ma, fa), (mb, fb) in itertools.product(current, repeat=2):
            found.setdefault(ma & mb, And(fa, fb))
            found.setdefault(ma | mb, Or(fa, fb))
            found.setdefault((full ^ ma) | mb, Implies(fa, fb))
            found.setdefault(full ^ (ma ^ mb), Iff(fa, fb))
        for m, f in found.items():
            reps.setdefault(m, f)
    return list(reps.values())


def exhaustive_theories(V: Sequence[str] = DEFAULT_UNIVERSE, max_depth: int = 3, max_size: int = 2) -> Iterator[Theory]:
    """Every theory of at most ``max_size`` distinct classes, drawn from :func:`formulas_by_class`."""
    reps = formulas_by_class(V, max_depth)
    for size in range(max_size + 1):
        for combo in itertools.combinations(reps, size):
            yield Theory(combo, tuple(V))


def random_formula(rng: random.Random, V: Sequence[str], d: int) -> Formula:
    """A random formula of depth exactly ``d``."""
    if d == 0:
        return Var(rng.choice(list(V)))
    op = rng.choice((Not,) + _BINARY)
    if op is Not:
        return Not(random_formula(rng, V, d - 1))
    deep = random_formula(rng, V, d - 1)
    other = random_formula(rng, V, rng.randrange(d))
    return op(deep, other) if rng.random() < 0.5 else op(other, deep)


def random_theories(
    count: int,
    seed: int = DEFAULT_SEED,
    V: Sequence[str] = DEFAULT_UNIVERSE,
    min_depth: int = 4,
    max_depth: int = 6,
    max_size: int = 4,
) -> list[Theory]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        size = rng.randint(1, max_size)
        formulas = tuple(random_formula(rng, V, rng.randint(min_depth, max_depth)) for _ in range(size))
        out.append(Theory(formulas, tuple(V)))
    return out


def run_corpus(
    seed: int = DEFAULT_SEED,
    *,
    exhaustive: bool = True,
    random_count: int = 500,
    V: Sequence[str] = DEFAULT_UNIVERSE,
    max_depth: int = 3,
    max_size: int = 2,
) -> dict:
    """Run every corpus theory through the ultrafilter route and the brute-force oracle."""
    V = tuple(V)
    lt_empty = build_lt_algebra(Theory((), V))
    theories = list(exhaustive_theories(V, max_depth, max_size)) if exhaustive else []
    theories += random_theories(random_count, seed, V)
    verdicts = [theory_verdict(T, lt_empty=lt_empty) for T in theories]
    consistent = [v for v in verdicts if v["consistent"]]
    summary = {
        "theories": len(verdicts),
        "consistent": len(consistent),
        "inconsistent": len(verdicts) - len(consistent),
        "oracle_disagreements": sum(not v["oracle_agrees"] for v in verdicts),
        "invalid_models": sum(not v["model_satisfies"] for v in consistent),
        "diagram_failures": sum(not v["diagram_commutes"] for v in consistent),
        "route_mismatches": sum(not v["ultrafilter_route_matches_model"] for v in consistent),
    }
    summary["passed"] = not (
        summary["oracle_disagreements"] or summary["invalid_models"]
        or summary["diagram_failures"] or summary["route_mismatches"]
    )
    return {
        "seed": seed,
        "universe": list(V),
        "exhaustive": {"enabled": exhaustive, "max_depth": max_depth, "max_size": max_size},
        "random_count": random_count,
        "summary": summary,
        "verdicts": verdicts,
    }


def max_formula_depth(T: Theory) -> int:
    return max((depth(f) for f in T.formulas), default=0)
