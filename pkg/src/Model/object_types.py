from enum import Enum, auto

class EntityKind(Enum):
    """
    Enum class for the kinds of entities stored in the entity tree.

    The kinds are:
    - FILE: A parsed source file.
    - PACKAGE: A package (shared by every file that declares it).
    - TYPE: A class, interface, enum, object or annotation type.
    - FUNCTION: A method, top-level function, constructor or synthetic accessor.
    - PROPERTY: A Kotlin property, a Java field or an enum constant.
    - VARIABLE: A local variable.
    - PARAMETER: A function or lambda parameter.
    """
    FILE = auto()
    PACKAGE = auto()
    TYPE = auto()
    FUNCTION = auto()
    PROPERTY = auto()
    VARIABLE = auto()
    PARAMETER = auto()

    def __str__(self):
        return self.name.capitalize()


class SourceLanguage(Enum):
    """
    Enum class for the language tag carried by every entity.
    BUILTIN is reserved for the synthetic built-in types.
    """
    KOTLIN = auto()
    JAVA = auto()
    BUILTIN = auto()

    def __str__(self):
        return self.name.lower()


class TypeFlavor(Enum):
    """
    Enum class for the flavor of a Type entity. Decides whether a supertype
    edge is an Extend or an Implement.
    """
    CLASS = auto()
    INTERFACE = auto()
    ENUM = auto()
    OBJECT = auto()
    ANNOTATION = auto()

    def __str__(self):
        return self.name.lower()
