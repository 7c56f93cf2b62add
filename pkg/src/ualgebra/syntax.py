"""Parser for the functional term notation `name(arg, ...)`.

Nullary symbols may be written with or without `()`; the printer
(`format_term`) always omits them.  Positions in errors are 0-based
character offsets into the input text.
"""

from __future__ import annotations

from .errors import (
    ArityMismatchError,
    InvalidSymbolError,
    TermSyntaxError,
    UnknownSymbolError,
)
from .signature import OpSymbol, Signature
from .terms import Term, format_term

__all__ = ["parse_term", "format_term"]

_NAME, _LPAREN, _RPAREN, _COMMA, _END = range(5)
_DELIMS = {"(": _LPAREN, ")": _RPAREN, ",": _COMMA}


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _DELIMS:
            tokens.append((_DELIMS[ch], ch, i))
            i += 1
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] not in _DELIMS:
            j += 1
        tokens.append((_NAME, text[i:j], i))
        i = j
    tokens.append((_END, "", n))
    return tokens


def parse_term(
    signature: Signature, text: str, aliases: dict[str, OpSymbol] | None = None
) -> Term:
    """Parse functional notation into a Term over the signature.

    `aliases` may map extra surface names to symbols of the signature
    (used for equation variables); aliases win over signature names.
    The parse is iterative, so input depth is unbounded.
    """
    tokens = _tokenize(text)
    pos = 0
    ops: list[int] = []
    # open applications: [name, expected arity, children seen, name offset]
    frames: list[list] = []

    while True:
        kind, value, at = tokens[pos]
        if kind != _NAME:
            raise TermSyntaxError("expected a symbol name", at)
        if aliases and value in aliases:
            sym = aliases[value]
        else:
            try:
                sym = signature.symbol(value)
            except InvalidSymbolError:
                raise UnknownSymbolError(value, at) from None
        ops.append(sym.index)
        arity = sym.arity
        pos += 1
        if tokens[pos][0] == _LPAREN:
            pos += 1
            if tokens[pos][0] == _RPAREN:
                pos += 1
                if arity != 0:
                    raise ArityMismatchError(value, arity, 0, position=at)
            else:
                frames.append([value, arity, 0, at])
                continue
        elif arity != 0:
            raise ArityMismatchError(value, arity, 0, position=at)

        # a complete subterm just ended: attach it and close finished frames
        while True:
            if not frames:
                kind, _, at = tokens[pos]
                if kind != _END:
                    raise TermSyntaxError("unexpected trailing input", at)
                return Term._wrap(signature, tuple(ops))
            frames[-1][2] += 1
            kind, _, at = tokens[pos]
            if kind == _COMMA:
                pos += 1
                break
            if kind == _RPAREN:
                pos += 1
                name, expected, got, name_at = frames.pop()
                if got != expected:
                    raise ArityMismatchError(name, expected, got, position=name_at)
                continue
            raise TermSyntaxError("expected ',' or ')'", at)
