"""Tokenizer shared by the polynomial reader and the query language."""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import ParseError


class Token(NamedTuple):
    kind: str  # NUM, NAME, STRING, OP, EOF
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<NUM>\d+)
  | (?P<NAME>[A-Za-z][A-Za-z0-9_]*)
  | (?P<STRING>"[^"\n]*")
  | (?P<OP>->|:=|[-+*^/(),;:=\[\]{}])
    """,
    re.VERBOSE,
)


def tokenize(text: str, line: int = 1, column: int = 1) -> list[Token]:
    """Split ``text`` into tokens, ending with an EOF token.

    ``line``/``column`` give the source position of ``text[0]`` so that
    embedded fragments report positions in the enclosing file.
    """
    tokens = []
    pos = 0
    line_start = pos - (column - 1)
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(line, pos - line_start + 1, "a token", text[pos])
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @classmethod
    def from_text(cls, text: str) -> TokenStream:
        return cls(tokenize(text))

    def peek(self, offset: int = 0) -> Token:
        i = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[i]

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind in ("OP", "NAME") and tok.text == text

    def accept(self, text: str) -> Token | None:
        if self.at(text):
            return self.next()
        return None

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(repr(text))
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.peek().kind != kind:
            self.fail(what)
        return self.next()

    def fail(self, expected: str):
        tok = self.peek()
        found = "end of input" if tok.kind == "EOF" else tok.text
        raise ParseError(tok.line, tok.column, expected, found)
