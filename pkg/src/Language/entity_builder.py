from __future__ import annotations

import posixpath

from Controller.logger import get_logger
from Model.entity import Entity, EntityId, ImportRef, Location, TypeRef, UseSite
from Model.object_types import EntityKind, SourceLanguage, TypeFlavor
from Model.parse_tree import (
    AnnotationNode, CallExpr, ClassNode, FileNode, FunctionNode, LambdaExpr, LocalVarNode,
    NameExpr, Node, ParamNode, PropertyNode, Span, TypeNode,
)

_FLAVORS = {
    "class": TypeFlavor.CLASS,
    "interface": TypeFlavor.INTERFACE,
    "enum": TypeFlavor.ENUM,
    "object": TypeFlavor.OBJECT,
    "annotation": TypeFlavor.ANNOTATION,
}


class EntityBuilder:
    """
    Visitor that interns the entities of one parsed file into the entity tree.

    Declarations are visited depth-first in source order, so ids follow the
    pre-order of the file. Each declaration node receives the id of the
    entity built from it. Raw TypeRefs are recorded unresolved.

    Attributes:
        - tree: The entity tree being filled.
        - ast: The file AST.
        - language: The language tag of every entity built.
        - created: Ids interned by this builder, in order.

    Methods:
        - build: Visits the whole file and returns the created ids.
        - visitX: One visit method per declaration node.
    """
    language = SourceLanguage.KOTLIN

    def __init__(self, tree, ast: FileNode, logger=None):
        self.tree = tree
        self.ast = ast
        self.path = ast.path
        self.logger = get_logger(__name__, logger)
        self.created: list[EntityId] = []
        self.file_id: EntityId | None = None


    def build(self) -> list[EntityId]:
        self.visitFile(self.ast)
        self.logger.debug(f"Built {len(self.created)} entities for {self.path}")
        return self.created


    # --- helpers ---

    def intern(self, entity: Entity, qualified_name: str | None = None) -> EntityId:
        entity_id = self.tree.intern_entity(entity, qualified_name=qualified_name)
        self.created.append(entity_id)
        return entity_id

    def location(self, span: Span) -> Location:
        return Location(self.path, span.line, max(span.end_line, span.line))

    def use_site(self, span: Span) -> UseSite:
        return UseSite(self.path, span.line)

    def type_ref(self, node: TypeNode | None) -> TypeRef | None:
        """Converts a type node into an unresolved TypeRef, function types included."""
        if node is None:
            return None
        return TypeRef(
            raw_name=node.text(),
            use_site=self.use_site(node.span),
            receiver=self.type_ref(node.receiver),
            parameters=[self.type_ref(parameter) for parameter in node.parameters],
            result=self.type_ref(node.result),
            is_function=node.is_function,
        )

    def annotation_refs(self, annotations: list[AnnotationNode]) -> list[TypeRef]:
        return [
            TypeRef(raw_name=annotation.name, use_site=self.use_site(annotation.span))
            for annotation in annotations if annotation.name
        ]

    def new_entity(self, name: str, kind: EntityKind, parent: EntityId | None, span: Span | None, **fields) -> Entity:
        return Entity(
            name=name, kind=kind, language=self.language, parent=parent,
            location=self.location(span) if span is not None else None, **fields,
        )


    # --- visitors ---

    def visitFile(self, node: FileNode):
        self.logger.debug(f"Visiting file {node.path}")
        package_name = node.package or ""
        known = len(self.tree)
        package_id = self.tree.package(package_name, self.language)
        if package_id >= known:
            self.created.append(package_id)

        file_name = posixpath.basename(node.path.replace("\\", "/"))
        qualified_name = f"{package_name}.{file_name}" if package_name else file_name
        file_entity = self.new_entity(file_name, EntityKind.FILE, None, node.span, package_id=package_id)
        file_entity.imports = [
            ImportRef(
                path=directive.path, use_site=self.use_site(directive.span), wildcard=directive.wildcard,
                alias=directive.alias, is_static=directive.is_static,
            )
            for directive in node.imports
        ]
        self.file_id = self.intern(file_entity, qualified_name=qualified_name)
        node.entity_id = self.file_id

        for declaration in node.declarations:
            self.visitDeclaration(declaration, package_id, top_level=True)


    def visitDeclaration(self, node: Node, owner: EntityId, top_level: bool = False):
        if isinstance(node, ClassNode):
            self.visitClass(node, owner)
        elif isinstance(node, FunctionNode):
            self.visitFunction(node, owner)
        elif isinstance(node, PropertyNode):
            self.visitProperty(node, owner, top_level=top_level)


    def visitClass(self, node: ClassNode, owner: EntityId):
        self.logger.debug(f"Visiting class {node.name}")
        entity = self.new_entity(
            node.name, EntityKind.TYPE, owner, node.span,
            type_flavor=_FLAVORS[node.flavor],
            raw_supertypes=[self.type_ref(supertype.type) for supertype in node.supertypes],
            annotations=self.annotation_refs(node.annotations),
            modifiers=list(node.modifiers),
            delegates_to=self.delegation_target(node),
        )
        type_id = self.intern(entity)
        node.entity_id = type_id

        if node.constructor_parameters is not None:
            self.visitPrimaryConstructor(node, type_id)

        for member in node.members:
            self.visitDeclaration(member, type_id)

        # Class-level code: initializers, supertype arguments and delegates
        for supertype in node.supertypes:
            for argument in supertype.arguments or []:
                self.visitBody(argument, type_id)
            if supertype.delegate is not None:
                self.visitBody(supertype.delegate, type_id)
        for block in node.initializers:
            self.visitBody(block, type_id)


    def visitPrimaryConstructor(self, node: ClassNode, type_id: EntityId):
        constructor = self.new_entity(
            node.name, EntityKind.FUNCTION, type_id, node.span, is_constructor=True,
            raw_parameter_types=[self.type_ref(parameter.type) for parameter in node.constructor_parameters
                                 if parameter.type is not None],
        )
        constructor_id = self.intern(constructor)
        node.constructor_id = constructor_id
        for parameter in node.constructor_parameters:
            self.visitParameter(parameter, constructor_id)
        for parameter in node.constructor_parameters:
            if parameter.default is not None:
                self.visitBody(parameter.default, constructor_id)

        for parameter in node.constructor_parameters:
            if parameter.property_keyword is None:
                continue
            property_entity = self.new_entity(
                parameter.name, EntityKind.PROPERTY, type_id, parameter.span,
                raw_return_type=self.type_ref(parameter.type),
                is_mutable=parameter.property_keyword == "var",
                annotations=self.annotation_refs(parameter.annotations),
                modifiers=list(parameter.modifiers),
            )
            property_id = self.intern(property_entity)
            parameter.property_id = property_id
            self.property_interned(property_id)


    def visitFunction(self, node: FunctionNode, owner: EntityId):
        self.logger.debug(f"Visiting function {node.name}")
        receiver = self.type_ref(node.receiver)
        return_type = self.type_ref(node.return_type)
        entity = self.new_entity(
            node.name, EntityKind.FUNCTION, owner, node.span,
            raw_return_type=return_type,
            raw_parameter_types=[self.type_ref(parameter.type) for parameter in node.parameters
                                 if parameter.type is not None],
            annotations=self.annotation_refs(node.annotations),
            modifiers=list(node.modifiers),
            is_constructor=node.is_constructor,
            is_extension=receiver is not None,
            receiver_type=receiver,
        )
        function_id = self.intern(entity)
        node.entity_id = function_id

        for parameter in node.parameters:
            self.visitParameter(parameter, function_id)
        for parameter in node.parameters:
            if parameter.default is not None:
                self.visitBody(parameter.default, function_id)
        if node.body is not None:
            self.visitBody(node.body, function_id)
        if node.expression_body is not None:
            self.visitBody(node.expression_body, function_id)


    def visitParameter(self, node: ParamNode, owner: EntityId) -> EntityId:
        entity = self.new_entity(
            node.name, EntityKind.PARAMETER, owner, node.span,
            raw_return_type=self.type_ref(node.type),
            annotations=self.annotation_refs(node.annotations),
            modifiers=list(node.modifiers),
        )
        node.entity_id = self.intern(entity)
        return node.entity_id


    def visitProperty(self, node: PropertyNode, owner: EntityId, top_level: bool = False):
        self.logger.debug(f"Visiting property {node.name}")
        declared = self.type_ref(node.type)
        if node.is_enum_constant:
            declared = TypeRef(raw_name=self.tree.entity(owner).name, use_site=self.use_site(node.span))
        entity = self.new_entity(
            node.name, EntityKind.PROPERTY, owner, node.span,
            raw_return_type=declared,
            is_mutable=node.mutable,
            is_enum_constant=node.is_enum_constant,
            annotations=self.annotation_refs(node.annotations),
            modifiers=list(node.modifiers),
        )
        property_id = self.intern(entity)
        node.entity_id = property_id
        if not node.is_enum_constant:
            self.property_interned(property_id)

        # Top-level property code belongs to the file
        code_owner = self.file_id if top_level else owner
        for argument in node.arguments:
            self.visitBody(argument, code_owner)
        if node.initializer is not None:
            self.visitBody(node.initializer, code_owner)
        if node.delegate is not None:
            self.visitBody(node.delegate, code_owner)


    def visitBody(self, body: Node, owner: EntityId):
        """Interns locals and lambda parameters of a body in pre-order."""
        for node in body.walk():
            if isinstance(node, LocalVarNode):
                entity = self.new_entity(
                    node.name, EntityKind.VARIABLE, owner, node.span,
                    raw_return_type=self.type_ref(node.type), is_mutable=node.mutable,
                )
                node.entity_id = self.intern(entity)
            elif isinstance(node, LambdaExpr):
                for parameter in node.parameters:
                    self.visitParameter(parameter, owner)


    # --- hooks ---

    def property_interned(self, property_id: EntityId) -> None:
        """Called after every non-enum property is interned."""


    def delegation_target(self, node: ClassNode) -> TypeRef | None:
        """
        The syntactic target of class delegation: the declared type of a
        constructor parameter (`I by param`) or the class created by a
        constructor call (`I by Impl()`).
        """
        for supertype in node.supertypes:
            delegate = supertype.delegate
            if delegate is None:
                continue
            if isinstance(delegate, NameExpr):
                for parameter in node.constructor_parameters or []:
                    if parameter.name == delegate.name and parameter.type is not None:
                        return self.type_ref(parameter.type)
            elif isinstance(delegate, CallExpr) and isinstance(delegate.callee, NameExpr):
                return TypeRef(raw_name=delegate.callee.name, use_site=self.use_site(delegate.span))
        return None
