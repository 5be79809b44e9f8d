"""Finite Boolean algebras given by explicit operation tables.

Elements are plain ints: the position of the element in the algebra's
carrier.  That position order is the canonical order used by every
deterministic choice elsewhere in the package (greedy ultrafilter
extension, enumeration order, first witnesses).
"""

from __future__ import annotations

import functools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, SizeError, StructureError

CARRIER_CAP = 2**12
# above this carrier size the triple-scan axioms (B1, B4) are sampled
EXHAUSTIVE_TRIPLE_LIMIT = 256
DEFAULT_TRIPLE_SAMPLES = 10**6
_BLOCK = 1 << 22


class FiniteAlgebra:
    """A structure (B, +, ·, −, 0, 1) over the carrier ``range(size)``.

    The tables are validated for shape and in-carrier closure on
    construction; the Boolean axioms are *not* assumed (see
    :func:`verify_axioms`).  Instances are immutable.
    """

    __slots__ = ("names", "join_table", "meet_table", "complement_table", "zero", "one", "_index")

    def __init__(self, names, join_table, meet_table, complement_table, zero, one):
        names = tuple(str(n) for n in names)
        n = len(names)
        if n == 0:
            raise StructureError("carrier must be nonempty")
        if len(set(names)) != n:
            raise StructureError("element names must be distinct")
        join_table = _as_table(join_table, (n, n), "join")
        meet_table = _as_table(meet_table, (n, n), "meet")
        complement_table = _as_table(complement_table, (n,), "complement")
        for label, value in (("zero", zero), ("one", one)):
            if not isinstance(value, (int, np.integer)) or not 0 <= value < n:
                raise StructureError(f"{label} element {value!r} is not in the carrier")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "join_table", join_table)
        object.__setattr__(self, "meet_table", meet_table)
        object.__setattr__(self, "complement_table", complement_table)
        object.__setattr__(self, "zero", int(zero))
        object.__setattr__(self, "one", int(one))
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(names)})

    def __setattr__(self, key, value):
        raise AttributeError("FiniteAlgebra is immutable")

    def __repr__(self):
        return f"FiniteAlgebra(size={self.size}, zero={self.names[self.zero]!r}, one={self.names[self.one]!r})"

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (
            self.names == other.names
            and self.zero == other.zero
            and self.one == other.one
            and np.array_equal(self.join_table, other.join_table)
            and np.array_equal(self.meet_table, other.meet_table)
            and np.array_equal(self.complement_table, other.complement_table)
        )

    __hash__ = None

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def carrier(self) -> range:
        return range(self.size)

    @property
    def is_trivial(self) -> bool:
        return self.zero == self.one

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ArgumentError(f"no element named {name!r}") from None

    def check(self, *elements) -> None:
        for x in elements:
            if not isinstance(x, (int, np.integer)) or isinstance(x, bool) or not 0 <= x < self.size:
                raise ArgumentError(f"{x!r} is not an element of this algebra")

    def join(self, x: int, y: int) -> int:
        self.check(x, y)
        return int(self.join_table[x, y])

    def meet(self, x: int, y: int) -> int:
        self.check(x, y)
        return int(self.meet_table[x, y])

    def complement(self, x: int) -> int:
        self.check(x)
        return int(self.complement_table[x])

    def leq(self, x: int, y: int) -> bool:
        """x ≤ y, read off the meet table as x·y = x."""
        self.check(x, y)
        return int(self.meet_table[x, y]) == x

    def leq_matrix(self) -> np.ndarray:
        """Boolean matrix ``L`` with ``L[x, y]`` iff x ≤ y."""
        return self.meet_table == np.arange(self.size)[:, None]


def _as_table(values, shape, label):
    try:
        arr = np.array(values, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise StructureError(f"{label} table is not an integer table: {exc}") from None
    if arr.shape != shape:
        raise StructureError(f"{label} table has shape {arr.shape}, expected {shape}")
    n = shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        pos = tuple(int(i) for i in bad[0])
        raise StructureError(f"{label} table entry at {pos} is {int(arr[pos])}, outside the carrier of size {n}")
    arr.setflags(write=False)
    return arr


# module-level spellings of the basic operations

def join(A: FiniteAlgebra, x: int, y: int) -> int:
    return A.join(x, y)


def meet(A: FiniteAlgebra, x: int, y: int) -> int:
    return A.meet(x, y)


def complement(A: FiniteAlgebra, x: int) -> int:
    return A.complement(x)


def leq(A: FiniteAlgebra, x: int, y: int) -> bool:
    return A.leq(x, y)


@dataclass(frozen=True)
class PowerSetAlgebra:
    """P(X) for a finite ground set X.

    Subsets are encoded as characteristic bit-vectors: bit ``i`` is set
    when ``ground[i]`` is a member.  Elements are ordered by ascending
    encoding, so the empty set is element 0 and X is the last element.
    """

    ground: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "ground", tuple(str(g) for g in self.ground))
        if len(set(self.ground)) != len(self.ground):
            raise StructureError("ground set has repeated atoms")

    @property
    def size(self) -> int:
        return 1 << len(self.ground)

    def encode(self, subset) -> int:
        pos = {g: i for i, g in enumerate(self.ground)}
        code = 0
        for atom in subset:
            if atom not in pos:
                raise ArgumentError(f"{atom!r} is not in the ground set")
            code |= 1 << pos[atom]
        return code

    def decode(self, code: int) -> frozenset:
        return frozenset(g for i, g in enumerate(self.ground) if code >> i & 1)

    def element_name(self, code: int) -> str:
        return "{" + ",".join(g for i, g in enumerate(self.ground) if code >> i & 1) + "}"

    def materialize(self, cap: int = CARRIER_CAP) -> FiniteAlgebra:
        if self.size > cap:
            raise SizeError(f"power set of {len(self.ground)} atoms has {self.size} elements, cap is {cap}")
        return _materialize(self.ground)


@functools.lru_cache(maxsize=512)
def _materialize(ground: tuple[str, ...]) -> FiniteAlgebra:
    ps = PowerSetAlgebra(ground)
    codes = np.arange(ps.size, dtype=np.int64)
    return FiniteAlgebra(
        [ps.element_name(c) for c in range(ps.size)],
        codes[:, None] | codes[None, :],
        codes[:, None] & codes[None, :],
        (ps.size - 1) ^ codes,
        zero=0,
        one=ps.size - 1,
    )


def two_element_algebra() -> FiniteAlgebra:
    return FiniteAlgebra(["0", "1"], [[0, 1], [1, 1]], [[0, 0], [0, 1]], [1, 0], zero=0, one=1)


def relabel(A: FiniteAlgebra, order: Sequence[int]) -> FiniteAlgebra:
    """Return an isomorphic copy of ``A`` whose carrier lists ``A``'s elements in ``order``."""
    order = np.asarray(order, dtype=np.int64)
    if sorted(order.tolist()) != list(A.carrier):
        raise ArgumentError("order must be a permutation of the carrier")
    new_pos = np.empty_like(order)
    new_pos[order] = np.arange(A.size)
    return FiniteAlgebra(
        [A.names[i] for i in order],
        new_pos[A.join_table[np.ix_(order, order)]],
        new_pos[A.meet_table[np.ix_(order, order)]],
        new_pos[A.complement_table[order]],
        zero=int(new_pos[A.zero]),
        one=int(new_pos[A.one]),
    )


# ---------------------------------------------------------------------------
# axioms

@dataclass(frozen=True)
class _Identity:
    label: str
    text: str
    arity: int
    sides: object  # (J, M, C, zero, one, x, y, z) -> (lhs, rhs)


_IDENTITIES = (
    _Identity("B1", "x+(y+z) = (x+y)+z", 3, lambda J, M, C, o, i, x, y, z: (J[x, J[y, z]], J[J[x, y], z])),
    _Identity("B1", "x·(y·z) = (x·y)·z", 3, lambda J, M, C, o, i, x, y, z: (M[x, M[y, z]], M[M[x, y], z])),
    _Identity("B2", "x+y = y+x", 2, lambda J, M, C, o, i, x, y, z: (J[x, y], J[y, x])),
    _Identity("B2", "x·y = y·x", 2, lambda J, M, C, o, i, x, y, z: (M[x, y], M[y, x])),
    _Identity("B3", "x+(x·y) = x", 2, lambda J, M, C, o, i, x, y, z: (J[x, M[x, y]], x)),
    _Identity("B3", "x·(x+y) = x", 2, lambda J, M, C, o, i, x, y, z: (M[x, J[x, y]], x)),
    _Identity("B4", "x·(y+z) = (x·y)+(x·z)", 3,
              lambda J, M, C, o, i, x, y, z: (M[x, J[y, z]], J[M[x, y], M[x, z]])),
    _Identity("B4", "x+(y·z) = (x+y)·(x+z)", 3,
              lambda J, M, C, o, i, x, y, z: (J[x, M[y, z]], M[J[x, y], J[x, z]])),
    _Identity("B5", "x+(−x) = 1", 1, lambda J, M, C, o, i, x, y, z: (J[x, C[x]], i)),
    _Identity("B5", "x·(−x) = 0", 1, lambda J, M, C, o, i, x, y, z: (M[x, C[x]], o)),
)

AXIOM_LABELS = ("B1", "B2", "B3", "B4", "B5")


@dataclass(frozen=True)
class AxiomResult:
    label: str
    passed: bool
    identity: str | None = None  # the failing identity, if any
    witness: tuple[int, ...] | None = None  # (x,), (x, y) or (x, y, z)
    sampled: bool = False


@dataclass(frozen=True)
class AxiomReport:
    algebra: FiniteAlgebra = field(repr=False)
    results: tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, label: str) -> AxiomResult:
        for r in self.results:
            if r.label == label:
                return r
        raise KeyError(label)

    def to_dict(self) -> dict:
        names = self.algebra.names
        out = {"size": self.algebra.size, "passed": self.passed, "axioms": {}}
        for r in self.results:
            entry = {"passed": r.passed, "sampled": r.sampled}
            if not r.passed:
                entry["identity"] = r.identity
                entry["witness"] = dict(zip("xyz", (names[w] for w in r.witness)))
            out["axioms"][r.label] = entry
        return out

    def render(self) -> str:
        names = self.algebra.names
        lines = [f"carrier size: {self.algebra.size}"]
        for r in self.results:
            mode = " (sampled)" if r.sampled else ""
            if r.passed:
                lines.append(f"{r.label}: pass{mode}")
            else:
                wit = ", ".join(f"{v}={names[w]}" for v, w in zip("xyz", r.witness))
                lines.append(f"{r.label}: FAIL{mode}  {r.identity}  at {wit}")
        lines.append("all axioms hold" if self.passed else "axioms violated")
        return "\n".join(lines)


def _first_violation(A, ident, rng, samples, exhaustive_limit):
    J, M, C = A.join_table, A.meet_table, A.complement_table
    n = A.size
    if ident.arity == 3 and n > exhaustive_limit:
        x, y, z = rng.integers(0, n, size=(3, samples))
        lhs, rhs = ident.sides(J, M, C, A.zero, A.one, x, y, z)
        bad = np.flatnonzero(lhs != rhs)
        if len(bad):
            k = bad[0]
            return (int(x[k]), int(y[k]), int(z[k])), True
        return None, True
    if ident.arity == 1:
        x = np.arange(n)
        lhs, rhs = ident.sides(J, M, C, A.zero, A.one, x, None, None)
        bad = np.flatnonzero(np.broadcast_to(lhs != rhs, (n,)))
        return ((int(bad[0]),) if len(bad) else None), False
    per_x = n ** (ident.arity - 1)
    block = max(1, _BLOCK // per_x)
    for start in range(0, n, block):
        xs = np.arange(start, min(n, start + block))
        if ident.arity == 2:
            x, y, z = xs[:, None], np.arange(n)[None, :], None
        else:
            x, y, z = xs[:, None, None], np.arange(n)[None, :, None], np.arange(n)[None, None, :]
        lhs, rhs = ident.sides(J, M, C, A.zero, A.one, x, y, z)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            first = bad[0]
            return (int(xs[first[0]]),) + tuple(int(v) for v in first[1:]), False
    return None, False


def verify_axioms(
    A: FiniteAlgebra,
    *,
    cap: int = CARRIER_CAP,
    exhaustive_limit: int = EXHAUSTIVE_TRIPLE_LIMIT,
    samples: int = DEFAULT_TRIPLE_SAMPLES,
    seed: int = 0,
) -> AxiomReport:
    """Check B1-B5 over every instantiation of x, y, z.

    For carriers above ``exhaustive_limit`` the three-variable axioms are
    checked on ``samples`` random triples instead; the results say so.
    The first counterexample (in lexicographic order, for exhaustive
    scans) is kept for each failing axiom.
    """
    if not isinstance(A, FiniteAlgebra):
        raise StructureError(f"expected a FiniteAlgebra, got {type(A).__name__}")
    if A.size > cap:
        raise SizeError(f"carrier of size {A.size} exceeds the cap of {cap}")
    rng = np.random.default_rng(seed)
    results = []
    for label in AXIOM_LABELS:
        failure = None
        sampled = False
        for ident in _IDENTITIES:
            if ident.label != label:
                continue
            witness, was_sampled = _first_violation(A, ident, rng, samples, exhaustive_limit)
            sampled |= was_sampled
            if witness is not None and failure is None:
                failure = (ident.text, witness)
        if failure is None:
            results.append(AxiomResult(label, True, sampled=sampled))
        else:
            results.append(AxiomResult(label, False, failure[0], failure[1], sampled))
    return AxiomReport(A, tuple(results))


# ---------------------------------------------------------------------------
# derived arithmetic

def check_complement_uniqueness(A: FiniteAlgebra) -> bool:
    """True iff −x is the only y with x+y = 1 and x·y = 0, for every x."""
    is_comp = (A.join_table == A.one) & (A.meet_table == A.zero)
    expected = np.zeros_like(is_comp)
    expected[np.arange(A.size), A.complement_table] = True
    return bool(np.array_equal(is_comp, expected))


def check_de_morgan(A: FiniteAlgebra) -> bool:
    J, M, C = A.join_table, A.meet_table, A.complement_table
    first = C[J] == M[C[:, None], C[None, :]]
    second = C[M] == J[C[:, None], C[None, :]]
    return bool(first.all() and second.all())


def _as_map(f, A: FiniteAlgebra, B: FiniteAlgebra) -> np.ndarray:
    if isinstance(f, Mapping):
        missing = [x for x in A.carrier if x not in f]
        if missing or len(f) != A.size:
            raise ArgumentError(f"map is not total on the domain carrier (missing {missing[:5]})")
        f = [f[x] for x in A.carrier]
    arr = np.asarray(f)
    if arr.shape != (A.size,) or not np.issubdtype(arr.dtype, np.integer):
        raise ArgumentError(f"map must assign an element to each of the {A.size} domain elements")
    if ((arr < 0) | (arr >= B.size)).any():
        raise ArgumentError("map has values outside the codomain carrier")
    return arr.astype(np.int64)


def check_homomorphism(f, A: FiniteAlgebra, B: FiniteAlgebra) -> bool:
    """Does ``f`` (sequence or total mapping A → B) preserve 0, 1, +, · and −?"""
    f = _as_map(f, A, B)
    if f[A.zero] != B.zero or f[A.one] != B.one:
        return False
    # gathers are memory-bound, so keep the gathered values narrow
    values = f.astype(np.int16 if B.size < 2**15 else np.int64)
    pair = f[:, None] * B.size + f[None, :]
    for a_table, b_table in ((A.join_table, B.join_table), (A.meet_table, B.meet_table)):
        b_flat = b_table.ravel().astype(values.dtype)
        if not np.array_equal(np.take(values, a_table), np.take(b_flat, pair)):
            return False
    return bool(np.array_equal(values[A.complement_table], B.complement_table[f]))


def is_isomorphism(f, A: FiniteAlgebra, B: FiniteAlgebra) -> bool:
    arr = _as_map(f, A, B)
    bijective = A.size == B.size and len(np.unique(arr)) == A.size
    return bijective and check_homomorphism(arr, A, B)


def atoms(A: FiniteAlgebra) -> list[int]:
    """Minimal nonzero elements, in canonical order."""
    below = A.leq_matrix()  # below[x, a]: x ≤ a
    counts = below.sum(axis=0)
    # a is an atom iff exactly {0, a} lie below it (and a ≠ 0)
    return [a for a in A.carrier if a != A.zero and counts[a] == 2 and below[A.zero, a]]


# ---------------------------------------------------------------------------
# file format

def algebra_from_dict(doc: Mapping, cap: int = CARRIER_CAP) -> FiniteAlgebra:
    """Build an algebra from the structured description used in algebra files."""
    if not isinstance(doc, Mapping):
        raise StructureError("algebra description must be an object")
    kind = doc.get("type")
    if kind == "powerset":
        ground = doc.get("ground")
        if not isinstance(ground, list):
            raise StructureError("powerset algebra needs a 'ground' list")
        return PowerSetAlgebra(tuple(ground)).materialize(cap)
    if kind != "table":
        raise StructureError(f"unknown algebra type {kind!r}")
    for key in ("elements", "zero", "one", "join", "meet", "not"):
        if key not in doc:
            raise StructureError(f"table algebra is missing {key!r}")
    names = [str(e) for e in doc["elements"]]
    if len(names) > cap:
        raise SizeError(f"carrier of size {len(names)} exceeds the cap of {cap}")
    index = {name: i for i, name in enumerate(names)}
    if len(index) != len(names):
        raise StructureError("element names must be distinct")

    def lookup(name, where):
        try:
            return index[str(name)]
        except KeyError:
            raise StructureError(f"{where}: {name!r} is not a declared element") from None

    def square(rows, label):
        if not isinstance(rows, list) or len(rows) != len(names):
            raise StructureError(f"{label} table must have {len(names)} rows")
        out = []
        for r, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != len(names):
                raise StructureError(f"{label} table row {r} must have {len(names)} entries")
            out.append([lookup(v, f"{label}[{r}]") for v in row])
        return out

    nots = doc["not"]
    if not isinstance(nots, list) or len(nots) != len(names):
        raise StructureError(f"not table must have {len(names)} entries")
    return FiniteAlgebra(
        names,
        square(doc["join"], "join"),
        square(doc["meet"], "meet"),
        [lookup(v, f"not[{i}]") for i, v in enumerate(nots)],
        zero=lookup(doc["zero"], "zero"),
        one=lookup(doc["one"], "one"),
    )


def algebra_to_dict(A: FiniteAlgebra) -> dict:
    names = A.names
    return {
        "type": "table",
        "elements": list(names),
        "zero": names[A.zero],
        "one": names[A.one],
        "join": [[names[v] for v in row] for row in A.join_table.tolist()],
        "meet": [[names[v] for v in row] for row in A.meet_table.tolist()],
        "not": [names[v] for v in A.complement_table.tolist()],
    }

