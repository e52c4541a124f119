from __future__ import annotations

from dataclasses import dataclass, field

from Controller.semantic_utils import bean_getter_names, binary_result_type, builtin_id, choose_overload, literal_type
from Model.data_types import BuiltinType
from Model.entity import EntityId, TypeRef, UseSite
from Model.object_types import EntityKind, SourceLanguage
from Model.parse_tree import (
    Block, CallExpr, ClassNode, ConditionalExpr, Expr, FileNode, FunctionNode, LambdaExpr,
    MemberExpr, NameExpr, Node, PropertyNode, TypeNode,
)
from Model.relation import RelationKind
from Model.scope import ScopeManager
from Model.symbol_table import Symbol

_FUNCTIONS = frozenset({EntityKind.FUNCTION})
_PROPERTIES = frozenset({EntityKind.PROPERTY})
_TYPES = frozenset({EntityKind.TYPE})
_CALLABLES = frozenset({EntityKind.FUNCTION, EntityKind.TYPE})


@dataclass(eq=False)
class ExpressionValue:
    """
    Inference state of one expression node.

    Attributes:
        - node: The expression.
        - inferred_type: The Type entity of its value; set at most once.
        - scope_stack: Entity and receiver scopes active at the node, innermost first.
    """
    node: Node
    inferred_type: EntityId | None = None
    scope_stack: list[EntityId] = field(default_factory=list)


class ExpressionAnalyzer:
    """
    Visitor that walks the bodies of one file, infers expression types and,
    in recording mode, records the relations found in expressions (Call,
    Create, Cast, Use and Delegate).

    Each inference round runs a fresh analyzer over every file without
    recording; inferred types persist in the resolver between rounds. The
    final pass runs with recording enabled and only reads that state.

    Attributes:
        - resolver: The RelationResolver holding the tree, the store and the inference state.
        - file_node: The file being analysed.
        - recording: True to record relations.
        - source: The entity relations are attributed to.
        - scope_manager: The scopes of the body being analysed.
    """
    def __init__(self, resolver, file_node: FileNode, recording: bool = False, logger=None):
        self.resolver = resolver
        self.tree = resolver.tree
        self.file_node = file_node
        self.path = file_node.path
        self.recording = recording
        self.logger = logger or resolver.logger
        self.source: EntityId | None = None
        self.scope_manager: ScopeManager | None = None


    def analyze(self) -> None:
        self.logger.debug(f"Analysing expressions of {self.path}")
        for declaration in self.file_node.declarations:
            self.visitDeclaration(declaration, top_level=True)


    # --- declarations ---

    def visitDeclaration(self, node: Node, top_level: bool = False):
        if isinstance(node, ClassNode):
            self.visitClassNode(node)
        elif isinstance(node, FunctionNode):
            self.visitFunctionNode(node)
        elif isinstance(node, PropertyNode) and top_level:
            self._begin(self.file_node.entity_id, self.file_node.entity_id)
            self.visitPropertyCode(node)


    def visitClassNode(self, node: ClassNode):
        self.logger.debug(f"Visiting class {node.name}")
        class_id = node.entity_id
        self._begin(class_id, class_id)

        # Primary-constructor parameters are visible in class-level code
        for parameter in node.constructor_parameters or []:
            self.scope_manager.add_symbol(Symbol(parameter.name, parameter.entity_id, self.resolver.type_of(parameter.entity_id)))

        for supertype in node.supertypes:
            for argument in supertype.arguments or []:
                self.visit(argument)
            if supertype.delegate is not None:
                delegate_type = self.visit(supertype.delegate)
                if delegate_type is None:
                    entity_target = self.tree.entity(class_id).delegates_to
                    delegate_type = entity_target.resolved if entity_target is not None else None
                self.record(delegate_type, RelationKind.DELEGATE, supertype.delegate)

        for member in node.members:
            if isinstance(member, PropertyNode):
                self.visitPropertyCode(member)
        for block in node.initializers:
            self.visit(block)

        for member in node.members:
            if isinstance(member, ClassNode):
                self.visitClassNode(member)
            elif isinstance(member, FunctionNode):
                self.visitFunctionNode(member)


    def visitPropertyCode(self, node: PropertyNode):
        """Visits a property's initializer, delegate and enum-entry arguments in the current scope."""
        for argument in node.arguments:
            self.visit(argument)
        if node.initializer is not None:
            value_type = self.visit(node.initializer)
            if value_type is not None and node.type is None and not node.is_enum_constant:
                self._infer(node.entity_id, value_type)
        if node.delegate is not None:
            delegate_type = self.visit(node.delegate)
            self.record(delegate_type, RelationKind.DELEGATE, node.delegate)


    def visitFunctionNode(self, node: FunctionNode):
        self.logger.debug(f"Visiting function {node.name}")
        function_id = node.entity_id
        entity = self.tree.entity(function_id)
        receiver = entity.receiver_type.resolved if entity.receiver_type is not None else None

        self._begin(function_id, None)
        self.scope_manager.enter_scope(node.name, entity_id=function_id, receiver=receiver)
        for parameter in node.parameters:
            self.scope_manager.add_symbol(Symbol(parameter.name, parameter.entity_id, self.resolver.type_of(parameter.entity_id)))
            if parameter.default is not None:
                self.visit(parameter.default)

        if node.body is not None:
            self.visit(node.body)
        if node.expression_body is not None:
            body_type = self.visit(node.expression_body)
            if body_type is not None and node.return_type is None:
                self._infer(function_id, body_type)
        self.scope_manager.exit_scope()


    def _begin(self, source: EntityId, root: EntityId | None):
        self.source = source
        self.scope_manager = ScopeManager(self.tree, root if root is not None else source)


    # --- helpers ---

    def visit(self, node: Node | None) -> EntityId | None:
        """Dispatches to the visit method of the node's class and remembers the result."""
        if node is None:
            return None
        visitor = getattr(self, f"visit{type(node).__name__}", None)
        if visitor is None:
            for child in node.children():
                self.visit(child)
            return None
        inferred = visitor(node)
        if isinstance(node, Expr):
            return self._remember(node, inferred)
        return inferred


    def _remember(self, node: Expr, inferred: EntityId | None) -> EntityId | None:
        value = self.resolver.values.get(node)
        if self.recording:
            return value.inferred_type if value is not None else None
        if value is None:
            value = ExpressionValue(node, scope_stack=self.scope_manager.scope_stack())
            self.resolver.values[node] = value
        if value.inferred_type is None and inferred is not None:
            value.inferred_type = inferred
        return value.inferred_type


    def _infer(self, entity_id: EntityId, type_id: EntityId) -> None:
        if not self.recording:
            self.resolver.infer_entity_type(entity_id, type_id)


    def record(self, target: EntityId | None, kind: RelationKind, node: Node) -> None:
        if not self.recording or target is None or self.source is None:
            return
        self.resolver.record(self.source, target, kind, UseSite(self.path, node.span.line))


    def resolve_type_node(self, node: TypeNode | None) -> EntityId | None:
        if node is None or node.is_function:
            return None
        found = self.scope_manager.resolve(node.name, _TYPES)
        return found if isinstance(found, int) else None


    def _enclosing_type(self) -> EntityId | None:
        for scope in self.scope_manager.scopes():
            if scope.receiver is not None:
                return scope.receiver
        current = self.scope_manager.entity_scope()
        while current is not None:
            entity = self.tree.entity(current)
            if entity.kind is EntityKind.TYPE:
                return current
            current = entity.parent
        return None


    def _dotted_name(self, node: Expr) -> str | None:
        if isinstance(node, NameExpr):
            return node.name
        if isinstance(node, MemberExpr):
            head = self._dotted_name(node.target)
            return f"{head}.{node.name}" if head is not None else None
        return None


    def _use_entity(self, entity_id: EntityId, node: Node) -> EntityId | None:
        """Records a Use when a name denotes a property, and returns its value type."""
        entity = self.tree.entity(entity_id)
        if entity.kind is EntityKind.TYPE:
            return entity_id
        if entity.kind is EntityKind.PROPERTY:
            self.record(entity_id, RelationKind.USE, node)
            return self.resolver.type_of(entity_id)
        if entity.kind in (EntityKind.VARIABLE, EntityKind.PARAMETER):
            return self.resolver.type_of(entity_id)
        return None


    # --- statements ---

    def visitBlock(self, node: Block):
        self.scope_manager.enter_scope("block")
        for statement in node.statements:
            self.visit(statement)
        self.scope_manager.exit_scope()


    def visitExprStmt(self, node):
        self.visit(node.expression)


    def visitReturnStmt(self, node):
        self.visit(node.expression)


    def visitLocalVarNode(self, node):
        self.logger.debug(f"Visiting local variable {node.name}")
        value_type = self.visit(node.initializer)
        declared = self.resolver.type_of(node.entity_id) if node.entity_id is not None else None
        if node.type is None and value_type is not None and node.entity_id is not None:
            self._infer(node.entity_id, value_type)
        self.scope_manager.add_symbol(Symbol(node.name, node.entity_id, declared or value_type))


    def visitWhileStmt(self, node):
        self.visit(node.condition)
        self.visit(node.body)


    def visitForStmt(self, node):
        self.visit(node.iterable)
        self.scope_manager.enter_scope("for")
        variable = node.variable
        declared = self.resolver.type_of(variable.entity_id) if variable.entity_id is not None else None
        self.scope_manager.add_symbol(Symbol(variable.name, variable.entity_id, declared))
        self.visit(node.body)
        self.scope_manager.exit_scope()


    # --- expressions ---

    def visitLiteralExpr(self, node):
        return literal_type(self.tree, node.kind)


    def visitNameExpr(self, node: NameExpr):
        found = self.scope_manager.resolve(node.name)
        if found is None:
            return None
        if isinstance(found, Symbol):
            if found.inferred_type is not None:
                return found.inferred_type
            return self.resolver.type_of(found.entity_id) if found.entity_id is not None else None
        return self._use_entity(found, node)


    def visitThisExpr(self, node):
        enclosing = self._enclosing_type()
        if enclosing is None or not node.is_super:
            return enclosing
        supertypes = self.tree.supertypes(enclosing)
        return supertypes[0] if supertypes else None


    def visitMemberExpr(self, node: MemberExpr):
        target_type = self.visit(node.target)
        if target_type is None:
            # Fully qualified names: com.example.Foo
            dotted = self._dotted_name(node)
            found = self.tree.resolve_qualified(dotted) if dotted is not None else None
            if found is not None and self.tree.entity(found).kind in (EntityKind.TYPE, EntityKind.PROPERTY):
                return self._use_entity(found, node)
            return None

        target = self.tree.entity(target_type)
        if target.language is SourceLanguage.JAVA and self.file_node.language is SourceLanguage.KOTLIN:
            # Kotlin property syntax on a Java object calls its getter
            for getter_name in bean_getter_names(node.name):
                getter = self._pick_function(self.tree.find_members(target_type, getter_name, _FUNCTIONS), 0)
                if getter is not None:
                    self.record(getter, RelationKind.CALL, node)
                    return self.resolver.type_of(getter)

        found = self.tree.find_member(target_type, node.name, _PROPERTIES | _TYPES)
        if found is None:
            return None
        return self._use_entity(found, node)


    def visitCallExpr(self, node: CallExpr):
        callee = node.callee
        target = None
        if isinstance(callee, NameExpr):
            target = self._resolve_called_name(callee.name, node.arity)
        elif isinstance(callee, MemberExpr):
            target = self._resolve_called_member(callee, node.arity)
        else:
            self.visit(callee)

        arguments = list(node.arguments)
        if node.lambda_argument is not None:
            arguments.append(node.lambda_argument)
        function_id = target if target is not None and self.tree.entity(target).kind is EntityKind.FUNCTION else None
        for index, argument in enumerate(arguments):
            if isinstance(argument, LambdaExpr):
                self.visitLambdaArgument(argument, self._parameter_ref(function_id, index))
            else:
                self.visit(argument)

        if target is None:
            return None
        if self.tree.entity(target).kind is EntityKind.TYPE:
            self.record(target, RelationKind.CREATE, node)
            return target
        self.record(target, RelationKind.CALL, node)
        return self.resolver.type_of(target)


    def _resolve_called_name(self, name: str, arity: int) -> EntityId | None:
        found = self.scope_manager.resolve(name, _CALLABLES)
        if not isinstance(found, int):
            return None
        entity = self.tree.entity(found)
        if entity.kind is EntityKind.TYPE:
            return found
        siblings = self.tree.find_members(entity.parent, name, _FUNCTIONS) if entity.parent is not None else [found]
        return self._pick_function(siblings or [found], arity)


    def _resolve_called_member(self, callee: MemberExpr, arity: int) -> EntityId | None:
        receiver_type = self.visit(callee.target)
        if receiver_type is None:
            dotted = self._dotted_name(callee)
            found = self.tree.resolve_qualified(dotted) if dotted is not None else None
            if found is not None and self.tree.entity(found).kind in _CALLABLES:
                return found
            return None

        members = self.tree.find_members(receiver_type, callee.name, _FUNCTIONS)
        if members:
            return self._pick_function(members, arity)
        extensions = self.resolver.extensions_on(receiver_type, callee.name)
        if extensions:
            return self._pick_function(extensions, arity)
        # Nested type constructor: Outer.Inner()
        return self.tree.find_member(receiver_type, callee.name, _TYPES)


    def _pick_function(self, candidates: list[EntityId], arity: int) -> EntityId | None:
        if not candidates:
            return None
        return choose_overload(self.tree, candidates, arity)


    def _parameter_ref(self, function_id: EntityId | None, index: int) -> TypeRef | None:
        if function_id is None:
            return None
        parameters = self.tree.entity(function_id).raw_parameter_types
        return parameters[index] if index < len(parameters) else None


    def visitLambdaArgument(self, node: LambdaExpr, parameter: TypeRef | None):
        """Visits a lambda passed for a parameter; a receiver-typed parameter puts its receiver in scope."""
        receiver = None
        if parameter is not None and parameter.is_function and parameter.receiver is not None:
            receiver = parameter.receiver.resolved
        self._visit_lambda(node, receiver)
        return self._remember(node, None)


    def visitLambdaExpr(self, node: LambdaExpr):
        self._visit_lambda(node, None)
        return None


    def _visit_lambda(self, node: LambdaExpr, receiver: EntityId | None):
        self.logger.debug("Visiting lambda expression")
        self.scope_manager.enter_scope("lambda", receiver=receiver)
        for parameter in node.parameters:
            declared = self.resolver.type_of(parameter.entity_id) if parameter.entity_id is not None else None
            self.scope_manager.add_symbol(Symbol(parameter.name, parameter.entity_id, declared))
        for statement in node.body:
            self.visit(statement)
        self.scope_manager.exit_scope()


    def visitNewExpr(self, node):
        for argument in node.arguments:
            self.visit(argument)
        created = self.resolve_type_node(node.type)
        if node.is_array:
            return None
        self.record(created, RelationKind.CREATE, node)
        return created


    def visitCastExpr(self, node):
        self.visit(node.expression)
        cast_type = self.resolve_type_node(node.type)
        self.record(cast_type, RelationKind.CAST, node)
        return cast_type


    def visitTypeTestExpr(self, node):
        self.visit(node.expression)
        return builtin_id(self.tree, BuiltinType.BOOLEAN)


    def visitBinaryExpr(self, node):
        left = self.visit(node.left)
        right = self.visit(node.right)
        return binary_result_type(self.tree, node.operator, left, right)


    def visitUnaryExpr(self, node):
        operand = self.visit(node.operand)
        if node.operator == "!":
            return builtin_id(self.tree, BuiltinType.BOOLEAN)
        return operand


    def visitAssignExpr(self, node):
        self.visit(node.target)
        self.visit(node.value)
        return None


    def visitConditionalExpr(self, node: ConditionalExpr):
        self.visit(node.condition)
        then_type = self.visit(node.then_branch)
        else_type = self.visit(node.else_branch)
        return then_type if then_type is not None and then_type == else_type else None


    def visitIndexExpr(self, node):
        self.visit(node.target)
        for index in node.indices:
            self.visit(index)
        return None


    def visitUnknownExpr(self, node):
        return None
