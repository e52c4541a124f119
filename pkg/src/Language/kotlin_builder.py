from __future__ import annotations

from Controller.semantic_utils import accessor_names
from Language.entity_builder import EntityBuilder
from Model.entity import Entity, EntityId, TypeRef
from Model.object_types import EntityKind, SourceLanguage
from Model.parse_tree import KotlinAst


class KotlinEntityBuilder(EntityBuilder):
    """
    Builds Kotlin entities. On top of the shared visitor it marks extension
    functions (their receiver type becomes `receiver_type`) and generates
    the JVM accessors of every property as synthetic functions.
    """
    language = SourceLanguage.KOTLIN

    def property_interned(self, property_id: EntityId) -> None:
        self.created.extend(synthesize_accessors(self.tree, property_id))


def build_kotlin_entities(ast: KotlinAst, tree, logger=None) -> list[EntityId]:
    """
    Interns the entities of a parsed Kotlin file.

    Args:
        - ast: The file AST.
        - tree: The entity tree, built-ins already interned.
        - logger: Optional logger.

    Returns:
        - The ids created, in id order.

    Raises:
        - DuplicateEntity: When a type or property is declared twice.
    """
    return KotlinEntityBuilder(tree, ast, logger).build()


def synthesize_accessors(tree, property_id: EntityId) -> list[EntityId]:
    """
    Interns the getter, and for `var` properties the setter, that the JVM
    generates for a Kotlin property. The accessors are children of the
    property's owner and point back at the property.

    Returns:
        - The accessor ids (getter first).
    """
    prop = tree.entity(property_id)
    getter_name, setter_name = accessor_names(prop.name, prop.is_mutable)

    getter = Entity(
        name=getter_name, kind=EntityKind.FUNCTION, language=SourceLanguage.KOTLIN, parent=prop.parent,
        is_synthetic=True, accessor_of=property_id, raw_return_type=prop.raw_return_type,
    )
    created = [tree.intern_entity(getter)]

    if setter_name is not None:
        parameter_types = []
        if prop.raw_return_type is not None:
            parameter_types.append(TypeRef(raw_name=prop.raw_return_type.raw_name, use_site=prop.raw_return_type.use_site))
        setter = Entity(
            name=setter_name, kind=EntityKind.FUNCTION, language=SourceLanguage.KOTLIN, parent=prop.parent,
            is_synthetic=True, accessor_of=property_id, raw_parameter_types=parameter_types,
        )
        created.append(tree.intern_entity(setter))
    return created
