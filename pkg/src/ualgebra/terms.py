"""Validated terms, constant-time building, destructuring, and the fold.

Every operation here is a single pass over the flat oplist with an
explicit stack, so arbitrarily deep terms never grow the call stack.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .errors import (
    ArityMismatchError,
    InvalidTermError,
    LimitExceededError,
    SignatureMismatchError,
)
from .oplist import Ok, check_indices, split_terms, status_of
from .signature import OpSymbol, Signature

# step(symbol, child_results) -> result, total on the signature
FoldStep = Callable[[OpSymbol, list], object]

# Default cap on enumerate_terms lengths.
ENUM_LIMIT = 12


class Term:
    """An oplist whose machine status is exactly one complete term.

    The constructor validates; code that can guarantee validity (building
    from existing terms, parsing) goes through `_wrap` and never rescans.
    """

    __slots__ = ("signature", "ops")

    def __init__(self, signature: Signature, ops: Sequence[int]):
        ops = check_indices(signature, ops)
        status = status_of(signature, ops)
        if status != Ok(1):
            raise InvalidTermError(f"not a term: status {status}")
        self.signature = signature
        self.ops = ops

    @classmethod
    def _wrap(cls, signature: Signature, ops: tuple[int, ...]) -> "Term":
        # caller guarantees ops is a valid single term over signature
        t = object.__new__(cls)
        t.signature = signature
        t.ops = ops
        return t

    def __len__(self) -> int:
        return len(self.ops)

    def __eq__(self, other):
        return (
            isinstance(other, Term)
            and self.ops == other.ops
            and self.signature == other.signature
        )

    def __hash__(self):
        return hash((self.signature, self.ops))

    def __str__(self):
        return format_term(self)

    def __repr__(self):
        if len(self.ops) > 32:
            return f"Term(<{len(self.ops)} symbols>)"
        return f"Term({format_term(self)!r})"


def build_term(symbol: OpSymbol, children: Sequence[Term]) -> Term:
    """Prefix-concatenate: the symbol followed by its children's oplists.

    Validity follows from the composition of the children's statuses, so
    nothing is rescanned.
    """
    signature = symbol.signature
    arity = symbol.arity
    if len(children) != arity:
        raise ArityMismatchError(symbol.name, arity, len(children))
    for child in children:
        if child.signature != signature:
            raise SignatureMismatchError(
                f"child {child!r} is over a different signature"
            )
    ops = (symbol.index,) + tuple(itertools.chain.from_iterable(c.ops for c in children))
    return Term._wrap(signature, ops)


def destructure(term: Term) -> tuple[OpSymbol, list[Term]]:
    """Inverse of build_term: head symbol plus the child terms in order."""
    signature = term.signature
    head = term.ops[0]
    arity = signature._arities[head]
    parts = split_terms(signature, term.ops[1:], arity)
    return signature.symbols[head], [Term._wrap(signature, p) for p in parts]


def fold(step: FoldStep, term: Term):
    """Structural recursion as one right-to-left pass with a result stack.

    `step(symbol, results)` receives the children's results left to right
    and must be total on the signature.  The returned value satisfies
    fold(step, build_term(nm, v)) == step(nm, [fold(step, c) for c in v]).
    """
    signature = term.signature
    arities = signature._arities
    symbols = signature.symbols
    stack = []
    push = stack.append
    for op in reversed(term.ops):
        a = arities[op]
        if a:
            args = stack[-a:]
            del stack[-a:]
            args.reverse()
            push(step(symbols[op], args))
        else:
            push(step(symbols[op], []))
    return stack[0]


def depth(term: Term) -> int:
    """Height of the term tree: 1 + max over children (0 for constants).

    Same machine as fold with the depth step, specialized so that
    million-node chains stay well under a second.
    """
    arities = term.signature._arities
    stack = []
    push = stack.append
    pop = stack.pop
    for op in reversed(term.ops):
        a = arities[op]
        if a == 0:
            push(1)
        elif a == 1:
            stack[-1] += 1
        else:
            best = pop()
            for _ in range(a - 1):
                v = pop()
                if v > best:
                    best = v
            push(best + 1)
    return stack[0]


def enumerate_terms(
    signature: Signature, max_len: int, *, limit: int = ENUM_LIMIT
) -> list[Term]:
    """All terms with oplist length <= max_len, shortest first and
    lexicographic (by symbol index) within one length.

    Built by dynamic programming over lengths rather than filtering all
    |signature|^n lists; the filter version lives in the test suite as
    the correctness oracle.
    """
    if max_len > limit:
        raise LimitExceededError(
            f"max_len {max_len} exceeds enumeration limit {limit}"
        )
    by_len: list[list[tuple[int, ...]]] = [[] for _ in range(max(max_len, 0) + 1)]
    for length in range(1, max_len + 1):
        found = []
        lengths = [l for l in range(1, length) if by_len[l]]
        for sym in signature.symbols:
            a = sym.arity
            if a == 0:
                if length == 1:
                    found.append((sym.index,))
                continue
            for parts in _splits(length - 1, a, lengths):
                pools = [by_len[p] for p in parts]
                for combo in itertools.product(*pools):
                    found.append(
                        (sym.index,) + tuple(itertools.chain.from_iterable(combo))
                    )
        found.sort()
        by_len[length] = found
    return [
        Term._wrap(signature, ops)
        for length in range(1, max_len + 1)
        for ops in by_len[length]
    ]


def _splits(total: int, parts: int, lengths: list[int]):
    # tuples of `parts` entries from `lengths` summing to `total`
    if parts == 1:
        if total in lengths:
            yield (total,)
        return
    if not lengths:
        return
    shortest = lengths[0]
    for head in lengths:
        if head > total - (parts - 1) * shortest:
            break
        for rest in _splits(total - head, parts - 1, lengths):
            yield (head,) + rest


def format_term(term: Term) -> str:
    """Functional notation with the minimal form: no parentheses on
    constants."""
    signature = term.signature
    arities = signature._arities
    symbols = signature.symbols
    out = []
    open_counts = []  # remaining children per open application
    for op in term.ops:
        out.append(symbols[op].name)
        if arities[op]:
            out.append("(")
            open_counts.append(arities[op])
        else:
            while open_counts:
                open_counts[-1] -= 1
                if open_counts[-1]:
                    out.append(",")
                    break
                out.append(")")
                open_counts.pop()
    return "".join(out)
