"""The Stone map x ↦ {ultrafilters containing x} and its verification."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import CARRIER_CAP, FiniteAlgebra, is_isomorphism
from .errors import InvariantViolation, SizeError
from .filters import Ultrafilter, enumerate_ultrafilters


def _membership(A: FiniteAlgebra, ults: list[Ultrafilter]) -> np.ndarray:
    """Matrix ``mem[x, p]``: element x lies in ultrafilter p."""
    mem = np.zeros((A.size, len(ults)), dtype=bool)
    for p, u in enumerate(ults):
        mem[sorted(u.members), p] = True
    return mem


def _codes(mem: np.ndarray) -> np.ndarray:
    # bit p of code[x] is set iff x ∈ ultrafilter p
    k = mem.shape[1]
    if k > 62:
        raise SizeError(f"{k} ultrafilters do not fit the bitmask encoding")
    weights = np.left_shift(np.int64(1), np.arange(k, dtype=np.int64))
    return (mem.astype(np.int64) * weights).sum(axis=1) if k else np.zeros(mem.shape[0], dtype=np.int64)


def _indices(code: int) -> list[int]:
    return [p for p in range(code.bit_length()) if code >> p & 1]


def stone_map(A: FiniteAlgebra, x: int, ultrafilters: list[Ultrafilter] | None = None, *, cap: int = CARRIER_CAP) -> frozenset[int]:
    """Indices (into the canonical ultrafilter list) of the ultrafilters containing ``x``."""
    A.check(x)
    if ultrafilters is None:
        ultrafilters = enumerate_ultrafilters(A, cap=cap)
    return frozenset(p for p, u in enumerate(ultrafilters) if x in u.members)


@dataclass(frozen=True)
class StoneReport:
    algebra: FiniteAlgebra = field(repr=False)
    ultrafilters: list[Ultrafilter] = field(repr=False)
    images: tuple[frozenset[int], ...] = field(repr=False)
    preserves_zero: bool
    preserves_one: bool
    preserves_join: bool
    preserves_meet: bool
    preserves_complement: bool
    injective: bool
    injective_by_separation: bool
    # separations[x, y], x < y: an ultrafilter containing exactly one of x, y
    separations: np.ndarray | None = field(repr=False, default=None)
    failures: tuple[str, ...] = ()

    @property
    def is_homomorphism(self) -> bool:
        return (self.preserves_zero and self.preserves_one and self.preserves_join
                and self.preserves_meet and self.preserves_complement)

    @property
    def passed(self) -> bool:
        return self.is_homomorphism and self.injective and self.injective_by_separation

    @property
    def full_powerset(self) -> bool:
        """Finite strengthening: the map is onto every subset of the ultrafilter list."""
        return self.injective and self.algebra.size == 2 ** len(self.ultrafilters)

    def to_dict(self) -> dict:
        names = self.algebra.names
        return {
            "size": self.algebra.size,
            "ultrafilter_count": len(self.ultrafilters),
            "ultrafilters": [u.names() for u in self.ultrafilters],
            "equations": {
                "s(0)=empty": self.preserves_zero,
                "s(1)=Ult": self.preserves_one,
                "s(x+y)=s(x)|s(y)": self.preserves_join,
                "s(x*y)=s(x)&s(y)": self.preserves_meet,
                "s(-x)=Ult-s(x)": self.preserves_complement,
            },
            "injective": self.injective,
            "injective_by_separation": self.injective_by_separation,
            "embedding": self.passed,
            "finite_strengthening_onto_powerset": self.full_powerset,
            "witness_table": {names[x]: sorted(self.images[x]) for x in self.algebra.carrier},
            "failures": list(self.failures),
        }

    def render(self) -> str:
        d = self.to_dict()
        lines = [f"carrier size: {d['size']}", f"ultrafilters: {d['ultrafilter_count']}"]
        for i, u in enumerate(d["ultrafilters"]):
            lines.append(f"  p{i} = {{{', '.join(u)}}}")
        for eq, ok in d["equations"].items():
            lines.append(f"{eq}: {'pass' if ok else 'FAIL'}")
        lines.append(f"injective: {'pass' if self.injective else 'FAIL'}")
        lines.append(f"injective via separating ultrafilters: {'pass' if self.injective_by_separation else 'FAIL'}")
        lines.append(f"embedding verified: {'yes' if self.passed else 'no'}")
        lines.append(f"onto full power set of ultrafilters (finite strengthening): {'yes' if self.full_powerset else 'no'}")
        lines.append("stone map:")
        for name, idx in d["witness_table"].items():
            lines.append(f"  {name} -> {{{', '.join(f'p{p}' for p in idx)}}}")
        for f in self.failures:
            lines.append(f"failure: {f}")
        return "\n".join(lines)


def verify_stone_embedding(A: FiniteAlgebra, *, cap: int = CARRIER_CAP) -> StoneReport:
    """Check that the Stone map is a one-to-one homomorphism into P(Ult A).

    Injectivity is checked twice: directly (distinct elements get distinct
    images) and by separation, where for x ≠ y an ultrafilter containing
    x·−y (or y·−x) must lie in exactly one of s(x), s(y).
    """
    ults = enumerate_ultrafilters(A, cap=cap)
    codes = _codes(_membership(A, ults))
    full = (1 << len(ults)) - 1
    J, M, C = A.join_table, A.meet_table, A.complement_table
    failures = []

    preserves_zero = int(codes[A.zero]) == 0
    preserves_one = int(codes[A.one]) == full
    join_bad = np.argwhere(codes[J] != (codes[:, None] | codes[None, :]))
    meet_bad = np.argwhere(codes[M] != (codes[:, None] & codes[None, :]))
    comp_bad = np.flatnonzero(codes[C] != (full ^ codes))
    names = A.names
    if not preserves_zero:
        failures.append("s(0) is not empty")
    if not preserves_one:
        failures.append("s(1) is not the set of all ultrafilters")
    if len(join_bad):
        x, y = join_bad[0]
        failures.append(f"s({names[x]}+{names[y]}) != s({names[x]}) | s({names[y]})")
    if len(meet_bad):
        x, y = meet_bad[0]
        failures.append(f"s({names[x]}*{names[y]}) != s({names[x]}) & s({names[y]})")
    if len(comp_bad):
        failures.append(f"s(-{names[comp_bad[0]]}) != Ult - s({names[comp_bad[0]]})")

    injective = len(np.unique(codes)) == A.size
    if not injective:
        failures.append("two distinct elements have the same image")

    # separation route: for x < y use c = x·−y, or y·−x when that is 0
    upper = np.triu(np.ones((A.size, A.size), dtype=bool), k=1)
    xy = M[:, C]  # xy[x, y] = x·−y
    yx = xy.T
    use_xy = xy != A.zero
    sep_elem = np.where(use_xy, xy, yx)
    inside = np.where(use_xy, np.arange(A.size)[:, None], np.arange(A.size)[None, :])
    outside = np.where(use_xy, np.arange(A.size)[None, :], np.arange(A.size)[:, None])
    cand = codes[sep_elem]
    lowbit = cand & -cand
    sep_ok = (sep_elem != A.zero) & (lowbit != 0) & ((codes[inside] & lowbit) != 0) & ((codes[outside] & lowbit) == 0)
    bad = np.argwhere(upper & ~sep_ok)
    separated = not len(bad)
    if not separated:
        x, y = bad[0]
        failures.append(f"no separating ultrafilter for {names[x]} != {names[y]}")
    # separations[x, y] = index of the witness ultrafilter, -1 off the upper triangle
    separations = np.full((A.size, A.size), -1, dtype=np.int64)
    hit = upper & sep_ok
    separations[hit] = np.log2(lowbit[hit]).astype(np.int64)
    return StoneReport(
        algebra=A,
        ultrafilters=ults,
        images=tuple(frozenset(_indices(int(c))) for c in codes),
        preserves_zero=preserves_zero,
        preserves_one=preserves_one,
        preserves_join=not len(join_bad),
        preserves_meet=not len(meet_bad),
        preserves_complement=not len(comp_bad),
        injective=injective,
        injective_by_separation=separated,
        separations=separations,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class StoneImage:
    source: FiniteAlgebra
    ultrafilters: list[Ultrafilter]
    map: tuple[frozenset[int], ...]
    image_algebra: FiniteAlgebra
    # element map source -> image_algebra
    element_map: tuple[int, ...]
    is_isomorphism: bool
    full_powerset: bool


def build_stone_representation(A: FiniteAlgebra, *, cap: int = CARRIER_CAP) -> StoneImage:
    """Construct the algebra of sets {s(x)} over Ult A and test s against it."""
    ults = enumerate_ultrafilters(A, cap=cap)
    codes = _codes(_membership(A, ults))
    full = (1 << len(ults)) - 1
    image_codes = np.unique(codes)

    def closed(values):
        idx = np.searchsorted(image_codes, values)
        idx = np.minimum(idx, len(image_codes) - 1)
        if not np.array_equal(image_codes[idx], values):
            raise InvariantViolation("image of the Stone map is not closed under set operations")
        return idx

    image = FiniteAlgebra(
        ["{" + ",".join(f"p{p}" for p in _indices(int(c))) + "}" for c in image_codes],
        closed(image_codes[:, None] | image_codes[None, :]),
        closed(image_codes[:, None] & image_codes[None, :]),
        closed(full ^ image_codes),
        zero=int(closed(np.array([0]))[0]),
        one=int(closed(np.array([full]))[0]),
    )
    element_map = tuple(int(i) for i in closed(codes))
    iso = is_isomorphism(list(element_map), A, image)
    return StoneImage(
        source=A,
        ultrafilters=ults,
        map=tuple(frozenset(_indices(int(c))) for c in codes),
        image_algebra=image,
        element_map=element_map,
        is_isomorphism=iso,
        full_powerset=iso and len(image_codes) == 2 ** len(ults),
    )
