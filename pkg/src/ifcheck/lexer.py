"""Tokenizer for the interface language: keywords, identifiers, punctuation, // comments."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .diagnostics import Diagnostic


class TokenKind(Enum):
    PACKAGE = "package"
    INTERFACE = "interface"
    EXTENDS = "extends"
    THROWS = "throws"
    IDENT = "identifier"
    LT = "<"
    GT = ">"
    COMMA = ","
    SEMI = ";"
    LPAREN = "("
    RPAREN = ")"
    LBRACE = "{"
    RBRACE = "}"
    DOT = "."
    EOF = "end-of-input"


KEYWORDS = {
    "package": TokenKind.PACKAGE,
    "interface": TokenKind.INTERFACE,
    "extends": TokenKind.EXTENDS,
    "throws": TokenKind.THROWS,
}

PUNCT = {
    "<": TokenKind.LT,
    ">": TokenKind.GT,
    ",": TokenKind.COMMA,
    ";": TokenKind.SEMI,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
    ".": TokenKind.DOT,
}

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class SourcePos:
    """1-based line/column of a character in the source text."""

    line: int
    column: int

    def __post_init__(self) -> None:
        assert self.line >= 1 and self.column >= 1


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    pos: SourcePos = field(compare=False)

    @property
    def end_column(self) -> int:
        """Column one past the last character of the lexeme."""
        return self.pos.column + len(self.lexeme)


def tokenize(source: str, source_name: str) -> tuple[list[Token], list[Diagnostic]]:
    """Split source into tokens.

    Whitespace and // comments are dropped. Unexpected characters produce an
    "illegal character" diagnostic and are skipped; the token stream always
    ends with a single EOF token.
    """
    tokens: list[Token] = []
    diags: list[Diagnostic] = []
    lines = source.split("\n")
    for lineno, text in enumerate(lines, start=1):
        col = 0  # 0-based index into text
        n = len(text)
        while col < n:
            ch = text[col]
            if ch in " \t\r":
                col += 1
                continue
            if ch == "/" and col + 1 < n and text[col + 1] == "/":
                break  # comment runs to end of line
            pos = SourcePos(lineno, col + 1)
            if ch in PUNCT:
                tokens.append(Token(PUNCT[ch], ch, pos))
                col += 1
                continue
            m = _IDENT_RE.match(text, col)
            if m:
                word = m.group(0)
                tokens.append(Token(KEYWORDS.get(word, TokenKind.IDENT), word, pos))
                col = m.end()
                continue
            diags.append(
                Diagnostic(
                    severity="error",
                    file=source_name,
                    line=lineno,
                    message=f"illegal character: '{ch}'",
                    echo_line=text,
                    caret_column=col + 1,
                )
            )
            col += 1
    eof_line = max(1, len(lines))
    eof_col = len(lines[-1]) + 1 if lines else 1
    tokens.append(Token(TokenKind.EOF, "", SourcePos(eof_line, max(1, eof_col))))
    return tokens, diags
