"""Filters and ultrafilters of finite Boolean algebras.

Maximal filters are reached by a deterministic greedy walk over the
carrier in canonical order; on a finite carrier that walk terminates
after at most ``size`` steps, so no choice principle is needed.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .algebra import CARRIER_CAP, FiniteAlgebra, atoms
from .errors import ArgumentError, PreconditionError, SizeError

# subset brute force is 2**n, so the definition-level oracle stops here
BRUTE_FORCE_CAP = 16


def _members_mask(A: FiniteAlgebra, S: Iterable[int]) -> np.ndarray:
    mask = np.zeros(A.size, dtype=bool)
    for x in S:
        A.check(x)
        mask[x] = True
    return mask


def _is_filter_mask(A: FiniteAlgebra, mask: np.ndarray) -> bool:
    if not mask[A.one]:
        return False
    return bool(np.array_equal(mask[A.meet_table], mask[:, None] & mask[None, :]))


class Filter:
    """A validated filter: contains 1 and x·y ∈ F iff x ∈ F and y ∈ F."""

    __slots__ = ("algebra", "members")

    def __init__(self, algebra: FiniteAlgebra, members: Iterable[int]):
        members = frozenset(int(x) for x in members)
        if not _is_filter_mask(algebra, _members_mask(algebra, members)):
            raise PreconditionError(f"{_render(algebra, members)} is not a filter")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "members", members)

    @classmethod
    def _trusted(cls, algebra, members):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "algebra", algebra)
        object.__setattr__(obj, "members", frozenset(members))
        return obj

    def __setattr__(self, key, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __contains__(self, x) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, Filter):
            return NotImplemented
        return self.algebra is other.algebra and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"{type(self).__name__}({_render(self.algebra, self.members)})"

    @property
    def is_proper(self) -> bool:
        return self.algebra.zero not in self.members

    def names(self) -> list[str]:
        """Member names sorted in canonical element order."""
        return [self.algebra.names[x] for x in sorted(self.members)]

    def generator(self) -> int:
        """Meet of all members; a finite filter is the principal filter at this element."""
        return _meet_all(self.algebra, self.members)


class Ultrafilter(Filter):
    """A filter containing exactly one of x, −x for every x."""

    __slots__ = ()

    def __init__(self, algebra: FiniteAlgebra, members: Iterable[int]):
        members = frozenset(int(x) for x in members)
        if not _is_ultra_mask(algebra, _members_mask(algebra, members)):
            raise PreconditionError(f"{_render(algebra, members)} is not an ultrafilter")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "members", members)


def _render(A, members):
    return "{" + ", ".join(A.names[x] for x in sorted(members)) + "}"


def _meet_all(A: FiniteAlgebra, S: Iterable[int]) -> int:
    g = A.one
    for x in S:
        g = int(A.meet_table[g, x])
    return g


def is_filter(A: FiniteAlgebra, S: Iterable[int]) -> bool:
    return _is_filter_mask(A, _members_mask(A, S))


def principal_filter(A: FiniteAlgebra, a: int) -> Filter:
    """{x : x·a = a}, the elements above ``a``."""
    A.check(a)
    return Filter._trusted(A, np.flatnonzero(A.meet_table[:, a] == a).tolist())


def unit_filter(A: FiniteAlgebra) -> Filter:
    return principal_filter(A, A.one)


def filter_generated_by(A: FiniteAlgebra, S: Iterable[int]) -> Filter:
    """Smallest filter containing S: in a finite algebra, the principal filter of ∏S."""
    S = list(S)
    A.check(*S)
    return principal_filter(A, _meet_all(A, S))


def _is_ultra_mask(A: FiniteAlgebra, mask: np.ndarray) -> bool:
    return _is_filter_mask(A, mask) and bool(np.all(mask != mask[A.complement_table]))


def is_ultrafilter(A: FiniteAlgebra, S: Iterable[int]) -> bool:
    return _is_ultra_mask(A, _members_mask(A, S))


def is_maximal(A: FiniteAlgebra, S: Iterable[int]) -> bool:
    """Proper filter such that adding any outside element generates the improper filter."""
    mask = _members_mask(A, S)
    if not _is_filter_mask(A, mask) or mask[A.zero]:
        return False
    g = _meet_all(A, np.flatnonzero(mask).tolist())
    # filter generated by S ∪ {x} is principal at g·x; improper iff g·x = 0
    outside = np.flatnonzero(~mask)
    return bool(np.all(A.meet_table[g, outside] == A.zero))


def extend_to_ultrafilter(A: FiniteAlgebra, F: Filter) -> Ultrafilter:
    """Greedily enlarge a proper filter to an ultrafilter.

    Walks the carrier in canonical order and absorbs each element whose
    addition keeps the filter proper.
    """
    if F.algebra is not A:
        raise ArgumentError("filter belongs to a different algebra")
    if not F.is_proper:
        raise PreconditionError("cannot extend an improper filter")
    current = F
    gen = current.generator()
    for x in A.carrier:
        if x in current.members:
            continue
        candidate = filter_generated_by(A, (gen, x))  # same filter as current ∪ {x}
        if candidate.is_proper:
            current = candidate
            gen = int(A.meet_table[gen, x])
    result = Ultrafilter(A, current.members)
    if not F.members <= result.members:
        raise PreconditionError("extension lost members of the starting filter")
    return result


def _subset_matrix(n: int) -> np.ndarray:
    codes = np.arange(1 << n, dtype=np.int64)
    return ((codes[:, None] >> np.arange(n)) & 1).astype(bool)


def _brute_filter_masks(A: FiniteAlgebra) -> np.ndarray:
    """Every subset of the carrier that satisfies the filter definition, as rows of a mask matrix."""
    n = A.size
    if n > BRUTE_FORCE_CAP:
        raise SizeError(f"brute-force subset scan limited to {BRUTE_FORCE_CAP} elements, carrier has {n}")
    M = _subset_matrix(n)
    ok = M[:, A.one].copy()
    for x in range(n):
        for y in range(n):
            ok &= M[:, A.meet_table[x, y]] == (M[:, x] & M[:, y])
    return M[ok]


def brute_force_ultrafilters(A: FiniteAlgebra) -> list[frozenset[int]]:
    """Ultrafilters found by testing the definition on all 2**n subsets."""
    filters = _brute_filter_masks(A)
    ultra = filters[np.all(filters != filters[:, A.complement_table], axis=1)]
    return [frozenset(np.flatnonzero(row).tolist()) for row in ultra]


def brute_force_maximal_filters(A: FiniteAlgebra) -> list[frozenset[int]]:
    """Proper filters not strictly contained in another proper filter, by brute force."""
    filters = _brute_filter_masks(A)
    proper = [frozenset(np.flatnonzero(row).tolist()) for row in filters if not row[A.zero]]
    return [p for p in proper if not any(p < q for q in proper)]


def _canonical_key(A: FiniteAlgebra, members) -> int:
    # each ultrafilter of a finite algebra is principal at exactly one atom
    return _meet_all(A, members)


def enumerate_ultrafilters(A: FiniteAlgebra, *, method: str = "atoms", cap: int = CARRIER_CAP) -> list[Ultrafilter]:
    """All ultrafilters of A, ordered by their generating atom.

    ``method="atoms"`` builds the principal filter at each atom;
    ``method="brute"`` tests the definition on every subset and is
    only available up to ``BRUTE_FORCE_CAP`` elements.
    """
    if A.size > cap:
        raise SizeError(f"carrier of size {A.size} exceeds the enumeration cap of {cap}")
    if method == "atoms":
        candidates = [principal_filter(A, a).members for a in atoms(A)]
    elif method == "brute":
        candidates = brute_force_ultrafilters(A)
    else:
        raise ArgumentError(f"unknown enumeration method {method!r}")
    found = [Ultrafilter(A, m) for m in candidates]
    return sorted(found, key=lambda u: _canonical_key(A, u.members))


def check_ultrafilter_prime(A: FiniteAlgebra, U: Filter) -> bool:
    """x+y ∈ U ⇒ x ∈ U or y ∈ U, and x·y ∈ U ⇒ x ∈ U and y ∈ U, for all pairs."""
    mask = _members_mask(A, U.members)
    if not _is_ultra_mask(A, mask):
        raise PreconditionError("check_ultrafilter_prime needs an ultrafilter")
    either = mask[:, None] | mask[None, :]
    both = mask[:, None] & mask[None, :]
    join_ok = ~mask[A.join_table] | either
    meet_ok = ~mask[A.meet_table] | both
    return bool(join_ok.all() and meet_ok.all())
