"""A small s-expression reader.

Lists are parsed into ``SList``, brace groups ``{0 1 3}`` into ``SBraces``
and bare tokens into ``Symbol`` (a ``str`` subclass carrying its position).
Comments start with ``;`` and run to end of line.
"""
from __future__ import annotations

import re

from .errors import ParseError

_TOKEN = re.compile(r"\s+|;[^\n]*|[(){}]|[^\s(){};]+")


class Symbol(str):
    line = 0
    column = 0

    def __new__(cls, text, line=0, column=0):
        obj = super().__new__(cls, text)
        obj.line = line
        obj.column = column
        return obj


class SList(list):
    line = 0
    column = 0


class SBraces(list):
    line = 0
    column = 0


def _tokens(text):
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        tok = m.group()
        if not tok.isspace() and not tok.startswith(";"):
            yield tok, line, col
        nl = tok.count("\n")
        if nl:
            line += nl
            col = len(tok) - tok.rfind("\n")
        else:
            col += len(tok)
        pos = m.end()


def parse_all(text: str) -> list:
    """Parse every top-level expression in ``text``."""
    stack = [SList()]
    closers = []
    for tok, line, col in _tokens(text):
        if tok in "({":
            node = SList() if tok == "(" else SBraces()
            node.line, node.column = line, col
            stack[-1].append(node)
            stack.append(node)
            closers.append(")" if tok == "(" else "}")
        elif tok in ")}":
            if not closers:
                raise ParseError(f"unexpected {tok!r}", line, col)
            if closers[-1] != tok:
                raise ParseError(f"expected {closers[-1]!r}, got {tok!r}", line, col)
            closers.pop()
            stack.pop()
        else:
            stack[-1].append(Symbol(tok, line, col))
    if closers:
        node = stack[-1]
        raise ParseError(f"unclosed {'(' if closers[-1] == ')' else '{'}", node.line, node.column)
    return list(stack[0])


def parse_one(text: str):
    items = parse_all(text)
    if len(items) != 1:
        raise ParseError(f"expected exactly one expression, found {len(items)}", 1, 1)
    return items[0]


def where(node):
    return getattr(node, "line", None), getattr(node, "column", None)


def fail(node, message):
    line, col = where(node)
    raise ParseError(message, line, col)


def as_int(node) -> int:
    if not isinstance(node, Symbol) or not re.fullmatch(r"\d+", node):
        fail(node, f"expected a natural number, got {render(node)}")
    return int(node)


def head(node) -> str | None:
    if isinstance(node, SList) and node and isinstance(node[0], Symbol):
        return str(node[0])
    return None


def render(node) -> str:
    if isinstance(node, SBraces):
        return "{" + " ".join(render(x) for x in node) + "}"
    if isinstance(node, list):
        return "(" + " ".join(render(x) for x in node) + ")"
    return str(node)
