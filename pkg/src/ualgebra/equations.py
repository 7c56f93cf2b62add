"""Equations with variables, satisfaction by assignment enumeration, and
theory (variety presentation) membership.

Variables are ordinary arity-0 symbols appended to the base signature, so
both sides of an equation are plain terms over the extended signature.
Assignments enumerate in mixed-radix lexicographic order with the leftmost
variable most significant, which makes the reported counterexample the
least one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .algebras import FiniteAlgebra
from .errors import (
    BudgetExceededError,
    CarrierMismatchError,
    FormatError,
    SignatureMismatchError,
)
from .signature import OpSymbol, Signature
from .syntax import parse_term
from .terms import Term, format_term

# Default cap on carrier_size ** context_size per satisfaction check.
DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class Equation:
    """Two terms over a signature extended with `context_size` variables."""

    context_size: int
    lhs: Term
    rhs: Term

    def __post_init__(self):
        if self.lhs.signature != self.rhs.signature:
            raise SignatureMismatchError("equation sides are over different signatures")
        extended = self.lhs.signature
        if not 0 <= self.context_size <= len(extended):
            raise SignatureMismatchError(
                f"context size {self.context_size} does not fit the signature"
            )
        for _, arity in extended.entries()[len(extended) - self.context_size:]:
            if arity != 0:
                raise SignatureMismatchError("variable symbols must have arity 0")

    @property
    def base_size(self) -> int:
        return len(self.lhs.signature) - self.context_size

    def variable_symbols(self) -> tuple[OpSymbol, ...]:
        return self.lhs.signature.symbols[self.base_size:]


@dataclass(frozen=True)
class Theory:
    """A named sequence of labelled equations presenting a variety."""

    name: str
    equations: tuple[tuple[str, Equation], ...]

    def __post_init__(self):
        labels = [label for label, _ in self.equations]
        if len(labels) != len(set(labels)):
            raise FormatError(f"duplicate equation labels in theory {self.name!r}")

    def to_json(self) -> dict:
        rows = []
        for label, eq in self.equations:
            rows.append(
                {
                    "label": label,
                    "vars": [sym.name for sym in eq.variable_symbols()],
                    "lhs": format_term(eq.lhs),
                    "rhs": format_term(eq.rhs),
                }
            )
        return {"name": self.name, "equations": rows}

    @classmethod
    def from_json(cls, signature: Signature, data) -> "Theory":
        if not isinstance(data, dict) or set(data) != {"name", "equations"}:
            raise FormatError('theory file must be {"name": ..., "equations": [...]}')
        name = data["name"]
        rows = data["equations"]
        if not isinstance(name, str) or not isinstance(rows, list):
            raise FormatError("theory name must be a string and equations a list")
        equations = []
        for i, row in enumerate(rows):
            if not isinstance(row, dict) or set(row) != {"label", "vars", "lhs", "rhs"}:
                raise FormatError(
                    f'equation {i} must be {{"label", "vars", "lhs", "rhs"}}'
                )
            if not isinstance(row["vars"], list) or not all(
                isinstance(v, str) for v in row["vars"]
            ):
                raise FormatError(f'equation {i}: "vars" must be a list of names')
            eq = parse_equation(signature, row["vars"], row["lhs"], row["rhs"])
            equations.append((row["label"], eq))
        return cls(name, tuple(equations))


def parse_equation(
    signature: Signature, var_names: Sequence[str], lhs: str, rhs: str
) -> Equation:
    """Parse both sides over the signature extended with one variable per
    name; var_names order fixes the variable indices."""
    var_names = list(var_names)
    if len(var_names) != len(set(var_names)):
        raise FormatError(f"duplicate variable names: {var_names}")
    taken = {name for name, _ in signature.entries()}
    for v in var_names:
        if v in taken:
            raise FormatError(f"variable name {v!r} collides with a symbol name")
    extended = signature.extend_with_variables(len(var_names))
    base = len(signature)
    aliases = {v: extended.symbols[base + i] for i, v in enumerate(var_names)}
    return Equation(
        len(var_names),
        parse_term(extended, lhs, aliases=aliases),
        parse_term(extended, rhs, aliases=aliases),
    )


def _check_compatible(algebra: FiniteAlgebra, context_size: int, term: Term) -> int:
    extended = term.signature
    base = len(extended) - context_size
    if base < 0:
        raise SignatureMismatchError("context larger than the term's signature")
    if algebra.signature.entries() != extended.entries()[:base]:
        raise SignatureMismatchError(
            "algebra signature is not the base of the term's signature"
        )
    for _, arity in extended.entries()[base:]:
        if arity != 0:
            raise SignatureMismatchError("variable symbols must have arity 0")
    return base


def evaluate_with(
    algebra: FiniteAlgebra,
    context_size: int,
    term: Term,
    assignment: Sequence[int],
) -> int:
    """Evaluate a term over the extended signature: base symbols use the
    algebra's tables, variable i takes assignment[i]."""
    base = _check_compatible(algebra, context_size, term)
    assignment = tuple(assignment)
    if len(assignment) != context_size:
        raise CarrierMismatchError(
            f"assignment must have {context_size} values, got {len(assignment)}"
        )
    for value in assignment:
        if not isinstance(value, int) or not 0 <= value < algebra.carrier_size:
            raise CarrierMismatchError(f"assignment value {value!r} outside the carrier")
    return _eval_extended(algebra, base, term.ops, assignment)


def _eval_extended(algebra, base, ops, assignment):
    arities = algebra.signature._arities
    tables = algebra.tables
    size = algebra.carrier_size
    stack = []
    push = stack.append
    pop = stack.pop
    for op in reversed(ops):
        if op >= base:
            push(assignment[op - base])
            continue
        a = arities[op]
        if a == 0:
            push(tables[op][0])
        elif a == 1:
            stack[-1] = tables[op][stack[-1]]
        else:
            index = 0
            for _ in range(a):
                index = index * size + pop()
            push(tables[op][index])
    return stack[0]


def find_violation(
    algebra: FiniteAlgebra, equation: Equation, *, budget: int = DEFAULT_BUDGET
) -> tuple[int, ...] | None:
    """Lexicographically least assignment on which the sides differ, or
    None when the algebra satisfies the equation."""
    base = _check_compatible(algebra, equation.context_size, equation.lhs)
    _check_compatible(algebra, equation.context_size, equation.rhs)
    n = equation.context_size
    count = algebra.carrier_size ** n
    if count > budget:
        raise BudgetExceededError(
            f"{algebra.carrier_size}^{n} = {count} assignments exceed budget {budget}"
        )
    lhs_ops = equation.lhs.ops
    rhs_ops = equation.rhs.ops
    for assignment in itertools.product(range(algebra.carrier_size), repeat=n):
        if _eval_extended(algebra, base, lhs_ops, assignment) != _eval_extended(
            algebra, base, rhs_ops, assignment
        ):
            return assignment
    return None


def satisfies(
    algebra: FiniteAlgebra, equation: Equation, *, budget: int = DEFAULT_BUDGET
) -> bool:
    return find_violation(algebra, equation, budget=budget) is None


@dataclass(frozen=True)
class ModelFailure:
    """First equation (in theory order) an algebra breaks, with the least
    violating assignment."""

    label: str
    assignment: tuple[int, ...]


def check_model(
    algebra: FiniteAlgebra, theory: Theory, *, budget: int = DEFAULT_BUDGET
) -> ModelFailure | None:
    for label, equation in theory.equations:
        violation = find_violation(algebra, equation, budget=budget)
        if violation is not None:
            return ModelFailure(label, violation)
    return None


def is_model(
    algebra: FiniteAlgebra, theory: Theory, *, budget: int = DEFAULT_BUDGET
) -> bool:
    return check_model(algebra, theory, budget=budget) is None
