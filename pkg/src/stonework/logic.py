"""Propositional formulas: syntax, parsing, truth tables and brute-force decisions.

Grammar (loosest binding first)::

    iff     := implies ('<->' implies)*        left-associative
    implies := or ('->' implies)?              right-associative
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '~' unary | atom
    atom    := IDENT | '(' iff ')'

Unicode ¬ ∧ ∨ → ↔ are accepted as aliases.  There are no constants.

Assignments over a universe ``V`` are indexed in binary with the first
variable most significant, so index 0 makes everything false and the
last index makes everything true.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Sequence, Union

from .errors import ArgumentError, LexError, ParseError, SizeError, UnknownVariableError

VAR_CAP = 20


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Not, And, Or, Implies, Iff]
BINARY = (And, Or, Implies, Iff)

_SYMBOL = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
# binding strength; Not binds tightest
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Var: 6}


def variables(f: Formula) -> set[str]:
    if isinstance(f, Var):
        return {f.name}
    if isinstance(f, Not):
        return variables(f.child)
    return variables(f.left) | variables(f.right)


def depth(f: Formula) -> int:
    if isinstance(f, Var):
        return 0
    if isinstance(f, Not):
        return 1 + depth(f.child)
    return 1 + max(depth(f.left), depth(f.right))


# ---------------------------------------------------------------------------
# tokenizer / parser

@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, NOT, AND, OR, IMP, IFF, LPAREN, RPAREN, EOF
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<IFF><->|↔)
  | (?P<IMP>->|→)
  | (?P<NOT>~|¬)
  | (?P<AND>&|∧)
  | (?P<OR>\||∨)
  | (?P<LPAREN>\()
  | (?P<RPAREN>\))
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise LexError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(Token("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, universe):
        self.tokens = tokens
        self.i = 0
        self.universe = universe

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind) -> Token:
        tok = self.tok
        if tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.text or 'end of input'!r}", tok.pos)
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.iff()
        if self.tok.kind != "EOF":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return f

    def iff(self):
        left = self.implies()
        while self.tok.kind == "IFF":
            self.i += 1
            left = Iff(left, self.implies())
        return left

    def implies(self):
        left = self.disj()
        if self.tok.kind == "IMP":
            self.i += 1
            return Implies(left, self.implies())
        return left

    def disj(self):
        left = self.conj()
        while self.tok.kind == "OR":
            self.i += 1
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.tok.kind == "AND":
            self.i += 1
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.tok.kind == "NOT":
            self.i += 1
            return Not(self.unary())
        if self.tok.kind == "LPAREN":
            self.i += 1
            f = self.iff()
            self.take("RPAREN")
            return f
        tok = self.take("IDENT") if self.tok.kind == "IDENT" else None
        if tok is None:
            raise ParseError(f"expected a variable or '(', found {self.tok.text or 'end of input'!r}", self.tok.pos)
        if self.universe is not None and tok.text not in self.universe:
            raise UnknownVariableError(f"variable {tok.text!r} at position {tok.pos} is not in the declared universe")
        return Var(tok.text)


def parse(text: str, universe: Optional[Sequence[str]] = None) -> Formula:
    """Parse ``text``; with a ``universe``, unknown variable names are rejected."""
    return _Parser(tokenize(text), None if universe is None else set(universe)).parse()


def pretty(f: Formula) -> str:
    """Render with the fewest parentheses that still parse back to ``f``."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        inner = pretty(f.child)
        return "~" + (f"({inner})" if isinstance(f.child, BINARY) else inner)
    op = type(f)
    left, right = pretty(f.left), pretty(f.right)
    lp, rp = _PREC[type(f.left)], _PREC[type(f.right)]
    if op is Implies:
        # right-associative: a same-level left operand needs brackets
        wrap_left, wrap_right = lp <= _PREC[op], rp < _PREC[op]
    else:
        wrap_left, wrap_right = lp < _PREC[op], rp <= _PREC[op]
    if wrap_left:
        left = f"({left})"
    if wrap_right:
        right = f"({right})"
    return f"{left} {_SYMBOL[op]} {right}"


# ---------------------------------------------------------------------------
# semantics

Assignment = dict  # variable name -> bool, total on the universe


def evaluate(f: Formula, h: Mapping[str, bool]) -> bool:
    if isinstance(f, Var):
        try:
            return bool(h[f.name])
        except KeyError:
            raise UnknownVariableError(f"assignment has no value for {f.name!r}") from None
    if isinstance(f, Not):
        return not evaluate(f.child, h)
    a, b = evaluate(f.left, h), evaluate(f.right, h)
    if isinstance(f, And):
        return a and b
    if isinstance(f, Or):
        return a or b
    if isinstance(f, Implies):
        return (not a) or b
    return a == b


def _check_universe(V: Sequence[str], cap: int) -> tuple[str, ...]:
    V = tuple(V)
    if len(set(V)) != len(V):
        raise ArgumentError("universe lists a variable twice")
    if len(V) > cap:
        raise SizeError(f"{len(V)} variables exceed the cap of {cap}")
    return V


def assignment_from_index(index: int, V: Sequence[str]) -> Assignment:
    n = len(V)
    return {v: bool(index >> (n - 1 - j) & 1) for j, v in enumerate(V)}


def assignment_index(h: Mapping[str, bool], V: Sequence[str]) -> int:
    index = 0
    for v in V:
        if v not in h:
            raise ArgumentError(f"assignment has no value for {v!r}")
        index = (index << 1) | bool(h[v])
    return index


def assignments(V: Sequence[str], cap: int = VAR_CAP) -> Iterator[Assignment]:
    V = _check_universe(V, cap)
    for i in range(1 << len(V)):
        yield assignment_from_index(i, V)


def _check_covers(formulas, V):
    missing = set().union(*(variables(f) for f in formulas)) - set(V) if formulas else set()
    if missing:
        raise UnknownVariableError(f"variables {sorted(missing)} are not in the universe")


def truth_table(f: Formula, V: Sequence[str], cap: int = VAR_CAP) -> list[tuple[Assignment, bool]]:
    V = _check_universe(V, cap)
    _check_covers([f], V)
    return [(h, evaluate(f, h)) for h in assignments(V, cap)]


def truth_mask(f: Formula, V: Sequence[str]) -> int:
    """Truth table packed into an int: bit ``i`` is the value under assignment ``i``."""
    rows = 1 << len(V)
    full = (1 << rows) - 1
    pos = {v: j for j, v in enumerate(V)}
    n = len(V)

    def go(g):
        if isinstance(g, Var):
            if g.name not in pos:
                raise UnknownVariableError(f"variable {g.name!r} is not in the universe")
            shift = n - 1 - pos[g.name]
            return sum(1 << i for i in range(rows) if i >> shift & 1)
        if isinstance(g, Not):
            return full ^ go(g.child)
        a, b = go(g.left), go(g.right)
        if isinstance(g, And):
            return a & b
        if isinstance(g, Or):
            return a | b
        if isinstance(g, Implies):
            return (full ^ a) | b
        return full ^ (a ^ b)

    return go(f)


@dataclass(frozen=True)
class Theory:
    """A finite list of formulas over an explicit, ordered variable universe."""

    formulas: tuple[Formula, ...]
    universe: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "formulas", tuple(self.formulas))
        object.__setattr__(self, "universe", tuple(self.universe))
        if len(set(self.universe)) != len(self.universe):
            raise ArgumentError("universe lists a variable twice")
        _check_covers(self.formulas, self.universe)

    @classmethod
    def of(cls, formulas, universe=None) -> "Theory":
        """Build from formulas or formula strings; the universe defaults to the sorted occurring names."""
        parsed = [parse(f, universe) if isinstance(f, str) else f for f in formulas]
        if universe is None:
            universe = sorted(set().union(*(variables(f) for f in parsed))) if parsed else []
        return cls(tuple(parsed), tuple(universe))

    def is_model(self, h: Mapping[str, bool]) -> bool:
        return all(evaluate(f, h) for f in self.formulas)


def is_tautology(f: Formula, V: Sequence[str], cap: int = VAR_CAP) -> bool:
    return all(value for _, value in truth_table(f, V, cap))


def _models(T: Theory, cap: int) -> Iterator[Assignment]:
    for h in assignments(T.universe, cap):
        if T.is_model(h):
            yield h


def semantically_equivalent(f: Formula, g: Formula, T: Theory, cap: int = VAR_CAP) -> bool:
    """f ↔ g holds in every model of T."""
    _check_covers([f, g], T.universe)
    return all(evaluate(f, h) == evaluate(g, h) for h in _models(T, cap))


def entails(T: Theory, f: Formula, cap: int = VAR_CAP) -> bool:
    _check_covers([f], T.universe)
    return all(evaluate(f, h) for h in _models(T, cap))


def sat_oracle(T: Theory, cap: int = VAR_CAP) -> Optional[Assignment]:
    """First model of T in canonical assignment order, by exhaustive search."""
    return next(_models(T, cap), None)


# ---------------------------------------------------------------------------
# theory files

def parse_theory(text: str) -> Theory:
    """One formula per line; ``#`` comments; optional ``vars: P Q R`` header."""
    universe = None
    lines = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vars:") and not seen_content and universe is None:
            universe = line[len("vars:"):].split()
            continue
        seen_content = True
        lines.append((lineno, line))
    formulas = []
    for lineno, line in lines:
        try:
            formulas.append(parse(line, universe))
        except (ParseError, LexError) as exc:
            raise type(exc)(f"line {lineno}: {exc.args[0].rsplit(' at position', 1)[0]}", exc.position) from None
    return Theory.of(formulas, universe)


def format_theory(T: Theory) -> str:
    lines = ["vars: " + " ".join(T.universe)]
    lines.extend(pretty(f) for f in T.formulas)
    return "\n".join(lines) + "\n"


def format_assignment(h: Mapping[str, bool], V: Sequence[str]) -> str:
    return " ".join(f"{v}={'1' if h[v] else '0'}" for v in V)
