"""AST for ground answer set programs.

Terms are plain Python values where possible: ``int`` for numerals and
``str`` for symbolic constants.  Structured terms (``Func``, ``Arith``,
``Var``) are frozen dataclasses.  ``Var`` and ``Arith`` only survive until
instantiation; a validated :class:`GroundProgram` contains neither.

The total order on ground terms follows ASP-Core-2: integers sort below
symbolic constants, integers numerically, constants lexicographically,
function terms by name then arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union


class ProgramError(Exception):
    """Input program is malformed (syntax, safety, or validation)."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        where = f" at {line}:{col}" if line is not None else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Var:
    """A variable; only legal in statements that will be instantiated."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Func:
    """Function term of nesting depth one, e.g. ``digit(i1)``."""

    name: str
    args: tuple["Term", ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({', '.join(term_str(a) for a in self.args)})"


@dataclass(frozen=True)
class Arith:
    """Unevaluated arithmetic over integer terms; folded at instantiation."""

    op: str  # one of + - *
    left: "Term"
    right: "Term"

    def __str__(self) -> str:
        return f"{term_str(self.left)}{self.op}{term_str(self.right)}"


Term = Union[int, str, Var, Func, Arith]

RELOPS = ("=", "!=", "<", ">", "<=", ">=")


def term_str(t: Term) -> str:
    return str(t)


def term_is_ground(t: Term) -> bool:
    if isinstance(t, Var):
        return False
    if isinstance(t, Func):
        return all(term_is_ground(a) for a in t.args)
    if isinstance(t, Arith):
        return term_is_ground(t.left) and term_is_ground(t.right)
    return True


def term_order_key(t: Term):
    """Sort key realizing the ASP-Core-2 total order on ground terms."""
    if isinstance(t, int):
        return (0, t)
    if isinstance(t, str):
        return (1, t)
    if isinstance(t, Func):
        return (2, t.name, len(t.args), tuple(term_order_key(a) for a in t.args))
    raise ProgramError(f"term {t!r} has no place in the ground term order")


def compare_terms(op: str, a: Term, b: Term) -> bool:
    ka, kb = term_order_key(a), term_order_key(b)
    if op == "=":
        return ka == kb
    if op == "!=":
        return ka != kb
    if op == "<":
        return ka < kb
    if op == ">":
        return ka > kb
    if op == "<=":
        return ka <= kb
    if op == ">=":
        return ka >= kb
    raise ProgramError(f"unknown relational operator {op!r}")


@dataclass(frozen=True)
class Atom:
    """A classical atom; ``negated`` marks explicit (classical) negation."""

    predicate: str
    args: tuple[Term, ...] = ()
    negated: bool = False

    def __str__(self) -> str:
        sign = "-" if self.negated else ""
        if not self.args:
            return f"{sign}{self.predicate}"
        return f"{sign}{self.predicate}({', '.join(term_str(a) for a in self.args)})"

    @property
    def complement(self) -> "Atom":
        return Atom(self.predicate, self.args, not self.negated)


@dataclass(frozen=True)
class Literal:
    """An atom with an optional default-negation (``not``) marker."""

    atom: Atom
    naf: bool = False

    def __str__(self) -> str:
        return f"not {self.atom}" if self.naf else str(self.atom)


@dataclass(frozen=True)
class Comparison:
    """Built-in relational literal; folded to a truth constant once ground."""

    op: str
    left: Term
    right: Term

    def __str__(self) -> str:
        return f"{term_str(self.left)} {self.op} {term_str(self.right)}"


@dataclass(frozen=True)
class BoolConst:
    """Residue of a folded built-in literal."""

    value: bool

    def __str__(self) -> str:
        return "#true" if self.value else "#false"


@dataclass(frozen=True)
class Guard:
    """One side of an aggregate guard, e.g. the ``>= 2`` in ``#count{..} >= 2``."""

    op: str
    bound: Term

    def __str__(self) -> str:
        return f"{self.op} {term_str(self.bound)}"


@dataclass(frozen=True)
class AggregateElement:
    terms: tuple[Term, ...]
    condition: tuple[Union[Literal, Comparison, BoolConst], ...] = ()

    def __str__(self) -> str:
        ts = ", ".join(term_str(t) for t in self.terms)
        if not self.condition:
            return ts
        return f"{ts} : {', '.join(str(c) for c in self.condition)}"


@dataclass(frozen=True)
class Aggregate:
    """Guarded aggregate literal ``left <op> #func{elements} <op> right``.

    Guards are stored so that ``left.op`` reads left-to-right, i.e. the
    literal holds when ``left.bound left.op value`` and
    ``value right.op right.bound``.
    """

    func: str  # count | sum | min | max
    elements: tuple[AggregateElement, ...]
    left: Optional[Guard] = None
    right: Optional[Guard] = None

    def __str__(self) -> str:
        body = "; ".join(str(e) for e in self.elements)
        out = f"#{self.func}{{{body}}}"
        if self.left is not None:
            out = f"{term_str(self.left.bound)} {self.left.op} {out}"
        if self.right is not None:
            out = f"{out} {self.right.op} {term_str(self.right.bound)}"
        return out


BodyLiteral = Union[Literal, Comparison, BoolConst, Aggregate]


def body_str(body: tuple[BodyLiteral, ...]) -> str:
    return ", ".join(str(b) for b in body)


@dataclass(frozen=True)
class FactStmt:
    head: Atom

    def __str__(self) -> str:
        return f"{self.head}."


@dataclass(frozen=True)
class RuleStmt:
    head: Atom
    body: tuple[BodyLiteral, ...]

    def __str__(self) -> str:
        return f"{self.head} :- {body_str(self.body)}."


@dataclass(frozen=True)
class ConstraintStmt:
    body: tuple[BodyLiteral, ...]

    def __str__(self) -> str:
        return f":- {body_str(self.body)}."


@dataclass(frozen=True)
class DisjunctiveStmt:
    heads: tuple[Atom, ...]
    body: tuple[BodyLiteral, ...] = ()

    def __str__(self) -> str:
        heads = " | ".join(str(h) for h in self.heads)
        if not self.body:
            return f"{heads}."
        return f"{heads} :- {body_str(self.body)}."


@dataclass(frozen=True)
class ChoiceElement:
    atom: Atom
    condition: tuple[Union[Literal, Comparison, BoolConst], ...] = ()

    def __str__(self) -> str:
        if not self.condition:
            return str(self.atom)
        return f"{self.atom} : {', '.join(str(c) for c in self.condition)}"


@dataclass(frozen=True)
class NppInfo:
    """Outcome schema of a probabilistic predicate instance.

    ``distribution`` is attached from a ``#prob`` sidecar line; ``None``
    means uniform over the outcomes.
    """

    name: str
    args: tuple[Term, ...]
    outcomes: tuple[Term, ...]
    distribution: Optional[tuple[float, ...]] = None

    @property
    def key(self) -> tuple:
        return (self.name, self.args)

    def effective_distribution(self) -> tuple[float, ...]:
        if self.distribution is not None:
            return self.distribution
        n = len(self.outcomes)
        return tuple(1.0 / n for _ in range(n))

    def outcome_atom(self, index: int) -> Atom:
        return Atom(self.name, self.args + (self.outcomes[index],))

    def __str__(self) -> str:
        head = Func(self.name, self.args) if self.args else self.name
        outs = ", ".join(term_str(o) for o in self.outcomes)
        return f"#npp({head}, [{outs}])"


@dataclass(frozen=True)
class ChoiceStmt:
    elements: tuple[ChoiceElement, ...]
    lower: Optional[int] = None
    upper: Optional[int] = None
    body: tuple[BodyLiteral, ...] = ()
    npp: Optional[NppInfo] = None

    def __str__(self) -> str:
        if self.npp is not None:
            out = str(self.npp)
        else:
            inner = "; ".join(str(e) for e in self.elements)
            out = f"{{{inner}}}"
            if self.lower is not None:
                out = f"{self.lower} {out}"
            if self.upper is not None:
                out = f"{out} {self.upper}"
        if self.body:
            out = f"{out} :- {body_str(self.body)}"
        return f"{out}."


@dataclass(frozen=True)
class NppStmt:
    """A probabilistic-predicate declaration before sugar expansion."""

    npp: NppInfo
    body: tuple[BodyLiteral, ...] = ()

    def __str__(self) -> str:
        out = str(self.npp)
        if self.body:
            out = f"{out} :- {body_str(self.body)}"
        return f"{out}."


@dataclass(frozen=True)
class WeakStmt:
    body: tuple[BodyLiteral, ...]
    weight: int
    level: int
    terms: tuple[Term, ...] = ()

    @property
    def payload(self) -> tuple:
        return (self.weight, self.level, self.terms)

    def __str__(self) -> str:
        extra = "".join(f", {term_str(t)}" for t in self.terms)
        return f":~ {body_str(self.body)}. [{self.weight}@{self.level}{extra}]"


@dataclass(frozen=True)
class QueryStmt:
    """A constraint-shaped query; compiled into its own sink node."""

    body: tuple[BodyLiteral, ...]

    def __str__(self) -> str:
        return f"#query :- {body_str(self.body)}."


Statement = Union[
    FactStmt,
    RuleStmt,
    ConstraintStmt,
    DisjunctiveStmt,
    ChoiceStmt,
    NppStmt,
    WeakStmt,
    QueryStmt,
]


class AtomTable:
    """Dense, insertion-ordered index over the atoms a program mentions."""

    def __init__(self):
        self._index: dict[Atom, int] = {}
        self._atoms: list[Atom] = []

    def add(self, atom: Atom) -> int:
        idx = self._index.get(atom)
        if idx is None:
            idx = len(self._atoms)
            self._index[atom] = idx
            self._atoms.append(atom)
        return idx

    def __len__(self) -> int:
        return len(self._atoms)

    def __contains__(self, atom: Atom) -> bool:
        return atom in self._index

    def __iter__(self) -> Iterator[Atom]:
        return iter(self._atoms)

    def index(self, atom: Atom) -> int:
        return self._index[atom]

    def atom(self, idx: int) -> Atom:
        return self._atoms[idx]

    @property
    def atoms(self) -> list[Atom]:
        return list(self._atoms)


def statement_atoms(stmt: Statement) -> Iterator[Atom]:
    """All atoms a statement mentions, heads first, in textual order."""
    if isinstance(stmt, FactStmt):
        yield stmt.head
        return
    if isinstance(stmt, RuleStmt):
        yield stmt.head
    elif isinstance(stmt, DisjunctiveStmt):
        yield from stmt.heads
    elif isinstance(stmt, ChoiceStmt):
        for el in stmt.elements:
            yield el.atom
            for c in el.condition:
                if isinstance(c, Literal):
                    yield c.atom
    elif isinstance(stmt, NppStmt):
        for i in range(len(stmt.npp.outcomes)):
            yield stmt.npp.outcome_atom(i)
    for lit in getattr(stmt, "body", ()):
        if isinstance(lit, Literal):
            yield lit.atom
        elif isinstance(lit, Aggregate):
            for el in lit.elements:
                for c in el.condition:
                    if isinstance(c, Literal):
                        yield c.atom


@dataclass
class GroundProgram:
    """Validated ground program plus its atom table and query list."""

    statements: tuple[Statement, ...]
    atoms: AtomTable
    queries: tuple[QueryStmt, ...] = ()

    @classmethod
    def from_statements(cls, statements: list[Statement]) -> "GroundProgram":
        table = AtomTable()
        queries = []
        for stmt in statements:
            for atom in statement_atoms(stmt):
                table.add(atom)
            if isinstance(stmt, QueryStmt):
                queries.append(stmt)
        return cls(tuple(statements), table, tuple(queries))

    def to_text(self) -> str:
        """Canonical textual form; parsing it back reproduces this AST."""
        lines = []
        for stmt in self.statements:
            lines.append(str(stmt))
            npp = getattr(stmt, "npp", None)
            if npp is not None and npp.distribution is not None:
                head = Func(npp.name, npp.args) if npp.args else npp.name
                probs = ", ".join(repr(p) for p in npp.distribution)
                lines.append(f"#prob {head} = {probs}.")
        return "\n".join(lines) + "\n"

    def npp_infos(self) -> list[NppInfo]:
        out = []
        for s in self.statements:
            npp = getattr(s, "npp", None)
            if npp is not None:
                out.append(npp)
        return out
