from __future__ import annotations

from Controller.custom_exception import SyntaxMismatch
from Controller.logger import get_logger
from Language.lexer import EOF, IDENT, NUMBER, OP, STRING, CHAR, Token, check_balance, tokenize
from Model.parse_tree import LiteralExpr, Span

_OPEN_TO_CLOSE = {"(": ")", "{": "}", "[": "]"}


class BaseParser:
    """
    Token cursor and recovery helpers shared by the recursive-descent parsers.

    Attributes:
        - path: The source path (used in spans and diagnostics).
        - tokens: The token list produced by the lexer.
        - position: Index of the current token.
        - diagnostics: Messages about skipped constructs.

    Methods:
        - at / accept / expect: Single-token lookahead helpers.
        - skip_balanced: Skips one token, or a whole delimited group.
        - mark / reset: Save and restore the cursor for bounded backtracking.
    """
    def __init__(self, source: str, path: str, logger=None):
        self.path = path
        self.logger = get_logger(__name__, logger)
        self.tokens: list[Token] = tokenize(source, path)
        check_balance(self.tokens, path)
        self.position = 0
        self.diagnostics: list[str] = []


    # --- cursor ---

    @property
    def token(self) -> Token:
        return self.tokens[self.position]

    def peek(self, offset: int = 1) -> Token:
        index = min(self.position + offset, len(self.tokens) - 1)
        return self.tokens[index]

    def advance(self) -> Token:
        token = self.tokens[self.position]
        if token.kind != EOF:
            self.position += 1
        return token

    def previous(self) -> Token:
        return self.tokens[max(self.position - 1, 0)]

    def mark(self) -> int:
        return self.position

    def reset(self, position: int) -> None:
        self.position = position

    def at_end(self) -> bool:
        return self.token.kind == EOF

    def at(self, *texts: str) -> bool:
        token = self.token
        return token.kind in (OP, IDENT) and token.text in texts

    def at_ident(self) -> bool:
        return self.token.kind == IDENT

    def accept(self, *texts: str) -> Token | None:
        if self.at(*texts):
            return self.advance()
        return None

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"Expected '{text}'")
        return self.advance()

    def expect_ident(self) -> Token:
        if not self.at_ident():
            self.fail("Expected an identifier")
        return self.advance()

    def span(self, token: Token | None = None) -> Span:
        token = token or self.token
        return Span(token.line, token.column)

    def close_span(self, start: Span) -> Span:
        """The span from `start` to the last consumed token."""
        return Span(start.line, start.column, self.previous().line)

    def fail(self, message: str):
        token = self.token
        found = token.text if token.kind != EOF else "end of file"
        raise SyntaxMismatch(f"{message}, found '{found}'", self.path, token.line, token.column)


    # --- recovery ---

    def skip_balanced(self) -> None:
        """Skips the current token, or the whole group when it opens a delimiter."""
        opener = self.advance()
        if opener.kind != OP or opener.text not in _OPEN_TO_CLOSE:
            return
        depth = 1
        while depth and not self.at_end():
            token = self.advance()
            if token.kind != OP:
                continue
            if token.text in _OPEN_TO_CLOSE:
                depth += 1
            elif token.text in (")", "}", "]"):
                depth -= 1

    def skip_type_arguments(self) -> None:
        """Skips a `<...>` group, counting nested angle brackets."""
        if not self.at("<"):
            return
        depth = 0
        while not self.at_end():
            if self.at("<"):
                depth += 1
            elif self.at(">"):
                depth -= 1
                if depth == 0:
                    self.advance()
                    return
            elif self.at(">="):
                depth -= 1
                if depth <= 0:
                    self.advance()
                    return
            elif self.at("(", "["):
                # Function types inside type arguments
                self.skip_balanced()
                continue
            elif self.at("{", ";", "}", ")", "]"):
                self.fail("Malformed type arguments")
            self.advance()

    def diagnose(self, message: str, token: Token | None = None) -> None:
        token = token or self.token
        diagnostic = f"{self.path}:{token.line}:{token.column}: {message}"
        self.diagnostics.append(diagnostic)
        self.logger.warning(diagnostic)


    # --- shared productions ---

    def parse_qualified_name(self) -> str:
        parts = [self.expect_ident().text]
        while self.at(".") and self.peek().kind == IDENT:
            self.advance()
            parts.append(self.advance().text)
        return ".".join(parts)

    def parse_literal(self) -> LiteralExpr | None:
        token = self.token
        span = self.span()
        if token.kind == NUMBER:
            self.advance()
            return LiteralExpr(span, kind=literal_kind(token.text), text=token.text)
        if token.kind == STRING:
            self.advance()
            return LiteralExpr(span, kind="string", text=token.text)
        if token.kind == CHAR:
            self.advance()
            return LiteralExpr(span, kind="char", text=token.text)
        if self.at("true", "false"):
            self.advance()
            return LiteralExpr(span, kind="boolean", text=token.text)
        if self.at("null"):
            self.advance()
            return LiteralExpr(span, kind="null", text=token.text)
        return None


def literal_kind(text: str) -> str:
    """Classifies a numeric literal by its shape and suffix."""
    lowered = text.lower()
    if lowered.startswith("0x"):
        return "long" if lowered.endswith("l") else "int"
    if lowered.endswith("l"):
        return "long"
    if lowered.endswith("f"):
        return "float"
    if lowered.endswith("d") or "." in lowered or "e" in lowered:
        return "double"
    return "int"
