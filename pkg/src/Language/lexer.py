from __future__ import annotations

from dataclasses import dataclass

import regex

from Controller.custom_exception import ParseError

# Token kinds
IDENT = "IDENT"
NUMBER = "NUMBER"
STRING = "STRING"
CHAR = "CHAR"
OP = "OP"
UNKNOWN = "UNKNOWN"
EOF = "EOF"

_TOKEN_PATTERN = regex.compile(
    r"""
    (?P<NEWLINE>\n)
  | (?P<SPACE>[\x20\t\r\f]+)
  | (?P<COMMENT>//[^\n]*|/\*.*?\*/)
  | (?P<OPEN_COMMENT>/\*)
  | (?P<STRING>\"\"\".*?\"\"\"|"(?:\\.|[^"\\\n])*")
  | (?P<OPEN_STRING>")
  | (?P<CHAR>'(?:\\.|[^'\\\n])+')
  | (?P<NUMBER>0[xX][0-9a-fA-F_]+[lL]?|\d[\d_]*\.\d[\d_]*(?:[eE][+-]?\d+)?[fFdD]?|\d[\d_]*(?:[eE][+-]?\d+)?[lLfFdD]?)
  | (?P<IDENT>`[^`\n]+`|[\p{L}_$][\p{L}\p{N}_$]*)
  | (?P<OP>===|!==|->|::|\?\.|\?:|!!|\.\.\.|\.\.|==|!=|<=|>=|&&|\|\||\+\+|--|\+=|-=|\*=|/=|%=|[{}()\[\].,;:=+\-*/%!?@<>&|^~\#])
  | (?P<UNKNOWN>.)
    """,
    regex.VERBOSE | regex.DOTALL,
)

_OPENERS = {"(": ")", "{": "}", "[": "]"}
_CLOSERS = {")": "(", "}": "{", "]": "["}


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    line: int
    column: int
    newline_before: bool = False

    def __repr__(self):
        return f"{self.kind}({self.text!r})@{self.line}:{self.column}"


def tokenize(source: str, path: str = "<unknown>") -> list[Token]:
    """
    Splits source text into tokens. Whitespace and comments are dropped;
    each token records whether a line break preceded it, which the Kotlin
    parser uses to end statements.

    Args:
        - source: The source text.
        - path: The file path, used in error messages.

    Returns:
        - The token list, terminated by an EOF token.
    """
    tokens = []
    line, line_start = 1, 0
    newline_before = False

    for match in _TOKEN_PATTERN.finditer(source):
        kind = match.lastgroup
        text = match.group()
        column = match.start() - line_start + 1

        if kind == "OPEN_COMMENT":
            raise ParseError("Unterminated block comment", path, line, column)
        if kind == "OPEN_STRING":
            raise ParseError("Unterminated string literal", path, line, column)

        if kind in ("NEWLINE", "SPACE", "COMMENT"):
            breaks = text.count("\n")
            if breaks:
                newline_before = True
                line += breaks
                line_start = match.start() + text.rindex("\n") + 1
            continue

        if kind == "IDENT" and text.startswith("`"):
            text = text[1:-1]
        tokens.append(Token(kind, text, line, column, newline_before))
        newline_before = False

        # Multi-line raw strings advance the line counter too
        if kind == "STRING" and "\n" in text:
            line += text.count("\n")
            line_start = match.start() + text.rindex("\n") + 1

    tokens.append(Token(EOF, "", line, max(len(source) - line_start + 1, 1), True))
    return tokens


def check_balance(tokens: list[Token], path: str = "<unknown>") -> None:
    """
    Verifies that parentheses, braces and brackets are balanced.

    Raises:
        - ParseError: At the first unmatched or mismatched delimiter.
    """
    stack: list[Token] = []
    for token in tokens:
        if token.kind != OP:
            continue
        if token.text in _OPENERS:
            stack.append(token)
        elif token.text in _CLOSERS:
            if not stack:
                raise ParseError(f"Unmatched '{token.text}'", path, token.line, token.column)
            opener = stack.pop()
            if opener.text != _CLOSERS[token.text]:
                raise ParseError(
                    f"'{token.text}' does not close '{opener.text}' opened at line {opener.line}",
                    path, token.line, token.column,
                )
    if stack:
        opener = stack[-1]
        raise ParseError(f"Unclosed '{opener.text}'", path, opener.line, opener.column)
