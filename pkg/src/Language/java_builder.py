from __future__ import annotations

from Language.entity_builder import EntityBuilder
from Model.entity import EntityId, TypeRef
from Model.object_types import SourceLanguage
from Model.parse_tree import ClassNode, JavaAst


class JavaEntityBuilder(EntityBuilder):
    """Builds Java entities. Fields become properties; no accessors are generated."""
    language = SourceLanguage.JAVA

    def delegation_target(self, node: ClassNode) -> TypeRef | None:
        return None


def build_java_entities(ast: JavaAst, tree, logger=None) -> list[EntityId]:
    """
    Interns the entities of a parsed Java file.

    Returns:
        - The ids created, in id order.

    Raises:
        - DuplicateEntity: When a type or field is declared twice.
    """
    return JavaEntityBuilder(tree, ast, logger).build()
