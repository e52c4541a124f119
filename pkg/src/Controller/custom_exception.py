class DependsError(Exception):
    """Base class for every error raised by the extractor."""


class ParseError(DependsError):
    """
    Raised when a source file cannot be parsed: unbalanced delimiters,
    unterminated comments or strings.
    """
    def __init__(self, message: str, path: str = "<unknown>", line: int = 0, column: int = 0):
        self.message = message
        self.path = path
        self.line = line
        self.column = column
        super().__init__(f"{path}:{line}:{column} - {message}")


class SyntaxMismatch(ParseError):
    """
    Raised by the parsers on an unexpected token. Always caught at a recovery
    point, where the construct is skipped token-balanced.
    """


class DuplicateEntity(DependsError):
    def __init__(self, qualified_name: str, first_location, second_location):
        self.qualified_name = qualified_name
        self.first_location = first_location
        self.second_location = second_location
        super().__init__(
            f"Entity '{qualified_name}' declared twice: at {_where(first_location)} and at {_where(second_location)}"
        )


class TaxonomyViolation(DependsError):
    def __init__(self, kind, source):
        self.kind = kind
        self.source = source
        super().__init__(f"Relation '{kind}' cannot have a Java source entity ({source.qualified_name})")


class RegistryConflict(DependsError):
    def __init__(self, extension: str, claimed_by: str, requested_by: str):
        self.extension = extension
        super().__init__(
            f"Extension '{extension}' is already claimed by '{claimed_by}', cannot register it for '{requested_by}'"
        )


class UnknownLanguage(DependsError):
    def __init__(self, requested: str, available):
        self.requested = requested
        self.available = sorted(available)
        super().__init__(f"Unknown language '{requested}', available: {', '.join(self.available)}")


class EmitError(DependsError):
    """Raised when an output file cannot be written."""
    def __init__(self, path, cause: OSError):
        self.path = path
        self.cause = cause
        super().__init__(f"Cannot write '{path}': {cause}")


def _where(location) -> str:
    if location is None:
        return "<synthetic>"
    return f"{location.path}:{location.start_line}"
