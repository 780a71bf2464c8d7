"""
Tokenizer for problem files.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict

from .models import ParseDiagnostic, SourceSpan


class TokenKind(str, Enum):
    """Token categories."""

    KEYWORD = "keyword"
    IDENT = "identifier"
    INT = "integer"
    LBRACKET = "["
    RBRACKET = "]"
    LPAREN = "("
    RPAREN = ")"
    COLON = ":"
    COMMA = ","
    EQ = "=="
    NEQ = "!="
    EOF = "end of input"


KEYWORDS = frozenset({"space", "uniform", "event", "fork", "and", "or", "not", "true", "false"})
DECL_KEYWORDS = frozenset({"space", "event", "fork"})

_PUNCTUATION = {
    "[": TokenKind.LBRACKET,
    "]": TokenKind.RBRACKET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ":": TokenKind.COLON,
    ",": TokenKind.COMMA,
}


class Token(BaseModel):
    """A lexeme with its position."""

    model_config = ConfigDict(frozen=True)

    kind: TokenKind
    text: str
    line: int
    column: int
    offset: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(line=self.line, column=self.column, length=len(self.text))

    @property
    def end_column(self) -> int:
        return self.column + len(self.text)

    def is_keyword(self, *words: str) -> bool:
        return self.kind is TokenKind.KEYWORD and self.text in words

    def describe(self) -> str:
        if self.kind is TokenKind.EOF:
            return "end of input"
        return f"'{self.text}'"


def tokenize(text: str) -> tuple[list[Token], list[ParseDiagnostic]]:
    """
    Split `text` into tokens.

    Whitespace (including CR from CRLF line endings) and ``#`` comments are
    skipped. Characters that start no token are reported and dropped, so the
    parser still sees the rest of the file.

    Parameters:
        text (str): Problem file contents.

    Returns:
        tuple[list[Token], list[ParseDiagnostic]]: The tokens, always ending with EOF, and any lexical errors.
    """
    tokens: list[Token] = []
    diagnostics: list[ParseDiagnostic] = []
    line, line_start, pos = 1, 0, 0
    length = len(text)

    def make(kind: TokenKind, start: int, end: int) -> Token:
        return Token(kind=kind, text=text[start:end], line=line, column=start - line_start + 1, offset=start)

    while pos < length:
        char = text[pos]
        if char == "\n":
            line += 1
            pos += 1
            line_start = pos
        elif char in " \t\r\f\v":
            pos += 1
        elif char == "#":
            while pos < length and text[pos] != "\n":
                pos += 1
        elif char.isascii() and (char.isalpha() or char == "_"):
            end = pos + 1
            while end < length and text[end].isascii() and (text[end].isalnum() or text[end] == "_"):
                end += 1
            word = text[pos:end]
            tokens.append(make(TokenKind.KEYWORD if word in KEYWORDS else TokenKind.IDENT, pos, end))
            pos = end
        elif char.isascii() and char.isdigit():
            end = pos + 1
            while end < length and text[end].isascii() and text[end].isdigit():
                end += 1
            tokens.append(make(TokenKind.INT, pos, end))
            pos = end
        elif text.startswith("==", pos):
            tokens.append(make(TokenKind.EQ, pos, pos + 2))
            pos += 2
        elif text.startswith("!=", pos):
            tokens.append(make(TokenKind.NEQ, pos, pos + 2))
            pos += 2
        elif char in _PUNCTUATION:
            tokens.append(make(_PUNCTUATION[char], pos, pos + 1))
            pos += 1
        else:
            diagnostics.append(
                ParseDiagnostic(
                    span=SourceSpan(line=line, column=pos - line_start + 1, length=1),
                    message=f"unexpected character {char!r}",
                )
            )
            pos += 1

    tokens.append(Token(kind=TokenKind.EOF, text="", line=line, column=pos - line_start + 1, offset=pos))
    return tokens, diagnostics
