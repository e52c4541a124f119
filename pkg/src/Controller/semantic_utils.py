from Model.data_types import LITERAL_TYPES, BuiltinType
from Model.object_types import EntityKind

ARITHMETIC_OPERATORS = ("+", "-", "*", "/", "%")
BOOLEAN_OPERATORS = ("&&", "||", "==", "!=", "===", "!==", "<", ">", "<=", ">=", "in", "!in", "instanceof")

# Widening order for numeric results
_NUMERIC_RANK = [BuiltinType.INT, BuiltinType.LONG, BuiltinType.FLOAT, BuiltinType.DOUBLE]


def capitalize_first(name: str) -> str:
    """Capitalizes only the first letter: url -> Url, eTag -> ETag."""
    return name[:1].upper() + name[1:]


def accessor_names(property_name: str, mutable: bool) -> tuple[str, str | None]:
    """
    Names of the JVM accessors generated for a Kotlin property.

    Args:
        - property_name: The property name.
        - mutable: True for `var` properties.

    Returns:
        - (getter name, setter name or None).
    """
    # isOpen keeps its name as getter and drops the prefix for the setter
    if property_name.startswith("is") and len(property_name) > 2 and property_name[2].isupper():
        getter = property_name
        setter = f"set{property_name[2:]}"
    else:
        getter = f"get{capitalize_first(property_name)}"
        setter = f"set{capitalize_first(property_name)}"
    return getter, (setter if mutable else None)


def bean_getter_names(property_name: str) -> tuple[str, str]:
    """Java getter names a Kotlin property read may map to: getX, isX."""
    return f"get{capitalize_first(property_name)}", f"is{capitalize_first(property_name)}"


def choose_overload(tree, candidates: list, arity: int):
    """
    Picks the function a call site refers to: the first candidate whose
    parameter count matches the arity, else the first candidate.

    Args:
        - tree: The entity tree.
        - candidates: Function ids sharing the called name, in id order.
        - arity: Number of arguments at the call site.
    """
    functions = [candidate for candidate in candidates if tree.entity(candidate).kind is EntityKind.FUNCTION]
    if not functions:
        return None
    for candidate in sorted(functions):
        if len(tree.entity(candidate).raw_parameter_types) == arity:
            return candidate
    return min(functions)


def builtin_id(tree, builtin: BuiltinType):
    return tree.builtin_names.get(builtin.kotlin_name)


def literal_type(tree, kind: str):
    """The built-in Type entity denoted by a literal kind, None for `null`."""
    builtin = LITERAL_TYPES.get(kind)
    return builtin_id(tree, builtin) if builtin is not None else None


def binary_result_type(tree, operator: str, left_type, right_type):
    """
    Infers the type of a binary expression from its operand types.
    Only built-in operand types produce a result.
    """
    if operator in BOOLEAN_OPERATORS:
        return builtin_id(tree, BuiltinType.BOOLEAN)
    if operator == "?:":
        return left_type if left_type is not None else right_type
    if operator not in ARITHMETIC_OPERATORS or left_type is None:
        return None

    string_id = builtin_id(tree, BuiltinType.STRING)
    if operator == "+" and string_id in (left_type, right_type):
        return string_id
    if right_type is None:
        return None

    ranks = {builtin_id(tree, builtin): rank for rank, builtin in enumerate(_NUMERIC_RANK)}
    if left_type in ranks and right_type in ranks:
        return left_type if ranks[left_type] >= ranks[right_type] else right_type
    return None
