from enum import Enum

class BuiltinType(Enum):
    """
    Enum class for the built-in types known to both frontends.

    Each member unifies a Kotlin type with its Java counterpart, so a Kotlin
    signature using `Int` and a Java signature using `int` point at the same
    entity. The value holds (kotlin name, java names).

    Members are declared in alphabetical order of their Kotlin name, which is
    also the order in which they are interned.
    """
    ANY = ("Any", ("Object", "java.lang.Object"))
    BOOLEAN = ("Boolean", ("boolean", "java.lang.Boolean"))
    CHAR = ("Char", ("char", "java.lang.Character"))
    DOUBLE = ("Double", ("double", "java.lang.Double"))
    FLOAT = ("Float", ("float", "java.lang.Float"))
    INT = ("Int", ("int", "java.lang.Integer"))
    LONG = ("Long", ("long", "java.lang.Long"))
    STRING = ("String", ("java.lang.String",))
    UNIT = ("Unit", ("void",))

    @property
    def kotlin_name(self) -> str:
        return self.value[0]

    @property
    def qualified_name(self) -> str:
        return f"kotlin.{self.kotlin_name}"

    @property
    def aliases(self) -> tuple[str, ...]:
        """Every spelling that resolves to this built-in."""
        return (self.kotlin_name, self.qualified_name) + self.value[1]

    def __str__(self):
        return self.kotlin_name


# Literal kinds produced by the parsers mapped to the built-in they denote
LITERAL_TYPES = {
    "int": BuiltinType.INT,
    "long": BuiltinType.LONG,
    "double": BuiltinType.DOUBLE,
    "float": BuiltinType.FLOAT,
    "boolean": BuiltinType.BOOLEAN,
    "char": BuiltinType.CHAR,
    "string": BuiltinType.STRING,
}
