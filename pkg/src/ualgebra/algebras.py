"""Finite algebras: dense carriers, flat operation tables, evaluation.

The carrier is {0..size-1}.  The table for a symbol of arity a lists the
outputs for all a-tuples of arguments in lexicographic order, i.e. a flat
row-major array with the leftmost argument most significant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ArityMismatchError,
    CarrierMismatchError,
    FormatError,
    SignatureMismatchError,
)
from .signature import OpSymbol, Signature
from .terms import Term


class FiniteAlgebra:
    """A finite carrier with one total operation table per symbol."""

    __slots__ = ("signature", "carrier_size", "tables")

    def __init__(self, signature: Signature, carrier_size: int, tables):
        if not isinstance(carrier_size, int) or carrier_size < 1:
            raise CarrierMismatchError(
                f"carrier must have at least one element, got {carrier_size!r}"
            )
        tables = tuple(tuple(table) for table in tables)
        if len(tables) != len(signature):
            raise CarrierMismatchError(
                f"expected {len(signature)} tables, got {len(tables)}"
            )
        for sym in signature.symbols:
            table = tables[sym.index]
            want = carrier_size ** sym.arity
            if len(table) != want:
                raise CarrierMismatchError(
                    f"table for {sym.name} must have {want} entries, got {len(table)}"
                )
            for value in table:
                if not isinstance(value, int) or not 0 <= value < carrier_size:
                    raise CarrierMismatchError(
                        f"table for {sym.name} has entry {value!r} outside the carrier"
                    )
        self.signature = signature
        self.carrier_size = carrier_size
        self.tables = tables

    def apply(self, symbol, args: Sequence[int]) -> int:
        """Apply one operation table to a tuple of carrier elements."""
        sym = symbol if isinstance(symbol, OpSymbol) else self.signature.symbol(symbol)
        if len(args) != sym.arity:
            raise ArityMismatchError(sym.name, sym.arity, len(args))
        size = self.carrier_size
        index = 0
        for x in args:
            if not 0 <= x < size:
                raise CarrierMismatchError(f"argument {x!r} outside the carrier")
            index = index * size + x
        return self.tables[sym.index][index]

    def evaluate(self, term: Term) -> int:
        """The unique homomorphic extension of the tables, applied to a
        term.  Single right-to-left pass; safe for million-node terms."""
        if term.signature != self.signature:
            raise SignatureMismatchError("term is over a different signature")
        arities = self.signature._arities
        tables = self.tables
        size = self.carrier_size
        stack = []
        push = stack.append
        pop = stack.pop
        for op in reversed(term.ops):
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

    def __eq__(self, other):
        return (
            isinstance(other, FiniteAlgebra)
            and self.signature == other.signature
            and self.carrier_size == other.carrier_size
            and self.tables == other.tables
        )

    def __hash__(self):
        return hash((self.signature, self.carrier_size, self.tables))

    def __repr__(self):
        return f"FiniteAlgebra(carrier={self.carrier_size}, over {self.signature!r})"

    def to_json(self) -> dict:
        return {
            "carrier": self.carrier_size,
            "tables": {
                sym.name: list(self.tables[sym.index])
                for sym in self.signature.symbols
            },
        }

    @classmethod
    def from_json(cls, signature: Signature, data) -> "FiniteAlgebra":
        if not isinstance(data, dict) or set(data) != {"carrier", "tables"}:
            raise FormatError('algebra file must be {"carrier": ..., "tables": ...}')
        carrier = data["carrier"]
        tables = data["tables"]
        if not isinstance(carrier, int) or isinstance(carrier, bool) or carrier < 1:
            raise FormatError('"carrier" must be a positive integer')
        if not isinstance(tables, dict):
            raise FormatError('"tables" must map symbol names to arrays')
        names = {name for name, _ in signature.entries()}
        missing = names - set(tables)
        extra = set(tables) - names
        if missing:
            raise FormatError(f"missing table(s) for: {', '.join(sorted(missing))}")
        if extra:
            raise FormatError(f"table(s) for unknown symbol(s): {', '.join(sorted(extra))}")
        ordered = []
        for sym in signature.symbols:
            table = tables[sym.name]
            if not isinstance(table, list) or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in table
            ):
                raise FormatError(f"table for {sym.name} must be an array of integers")
            ordered.append(table)
        try:
            return cls(signature, carrier, ordered)
        except CarrierMismatchError as exc:
            raise FormatError(str(exc)) from None


@dataclass(frozen=True)
class HomViolation:
    """A witness that a carrier map is not a homomorphism: mapping the
    source result (`lhs`) differs from the target operation applied to
    the mapped arguments (`rhs`)."""

    symbol: OpSymbol
    args: tuple[int, ...]
    lhs: int
    rhs: int


def check_homomorphism(
    source: FiniteAlgebra, target: FiniteAlgebra, mapping: Sequence[int]
) -> HomViolation | None:
    """First (symbol index, then argument tuple, lexicographic) violation
    of the homomorphism condition, or None if the map commutes with every
    operation."""
    if source.signature != target.signature:
        raise SignatureMismatchError("algebras are over different signatures")
    mapping = tuple(mapping)
    if len(mapping) != source.carrier_size:
        raise CarrierMismatchError(
            f"mapping must cover {source.carrier_size} elements, got {len(mapping)}"
        )
    for value in mapping:
        if not isinstance(value, int) or not 0 <= value < target.carrier_size:
            raise CarrierMismatchError(
                f"mapping value {value!r} outside the target carrier"
            )
    s_size = source.carrier_size
    t_size = target.carrier_size
    for sym in source.signature.symbols:
        s_table = source.tables[sym.index]
        t_table = target.tables[sym.index]
        for args in itertools.product(range(s_size), repeat=sym.arity):
            s_index = 0
            t_index = 0
            for x in args:
                s_index = s_index * s_size + x
                t_index = t_index * t_size + mapping[x]
            lhs = mapping[s_table[s_index]]
            rhs = t_table[t_index]
            if lhs != rhs:
                return HomViolation(sym, args, lhs, rhs)
    return None


def is_homomorphism(
    source: FiniteAlgebra, target: FiniteAlgebra, mapping: Sequence[int]
) -> bool:
    return check_homomorphism(source, target, mapping) is None
