"""
Abstract syntax tree shared by the Kotlin and Java frontends.

Both parsers produce the same node classes; language-specific syntax is
normalised while parsing (a Java `(T) e` and a Kotlin `e as T` are both a
CastExpr, a Java field and a Kotlin property are both a PropertyNode).
Nodes compare by identity so the resolver can key per-expression state on
them. Declaration nodes carry the id of the entity built from them.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Iterator

from Model.object_types import SourceLanguage


@dataclass(frozen=True)
class Span:
    line: int
    column: int
    end_line: int = 0


@dataclass(eq=False)
class Node:
    span: Span

    def children(self) -> Iterator[Node]:
        """Yields the direct child nodes in source order."""
        for node_field in fields(self):
            value = getattr(self, node_field.name)
            if isinstance(value, Node):
                yield value
            elif isinstance(value, list):
                for item in value:
                    if isinstance(item, Node):
                        yield item

    def walk(self) -> Iterator[Node]:
        """Yields this node and all of its descendants, depth-first pre-order."""
        yield self
        for child in self.children():
            yield from child.walk()


# --- Types, imports, annotations ---

@dataclass(eq=False)
class TypeNode(Node):
    name: str
    nullable: bool = False
    is_function: bool = False
    receiver: TypeNode | None = None
    parameters: list[TypeNode] = field(default_factory=list)
    result: TypeNode | None = None

    def text(self) -> str:
        if not self.is_function:
            return self.name
        params = ", ".join(parameter.text() for parameter in self.parameters)
        receiver = f"{self.receiver.text()}." if self.receiver is not None else ""
        result = self.result.text() if self.result is not None else "Unit"
        return f"{receiver}({params}) -> {result}"


@dataclass(eq=False)
class ImportNode(Node):
    path: str
    wildcard: bool = False
    alias: str | None = None
    is_static: bool = False


@dataclass(eq=False)
class AnnotationNode(Node):
    name: str


# --- Expressions ---

@dataclass(eq=False)
class Expr(Node):
    pass


@dataclass(eq=False)
class NameExpr(Expr):
    name: str


@dataclass(eq=False)
class LiteralExpr(Expr):
    kind: str  # int | long | double | float | boolean | char | string | null
    text: str = ""


@dataclass(eq=False)
class ThisExpr(Expr):
    is_super: bool = False


@dataclass(eq=False)
class MemberExpr(Expr):
    target: Expr
    name: str
    safe: bool = False


@dataclass(eq=False)
class CallExpr(Expr):
    callee: Expr
    arguments: list[Expr] = field(default_factory=list)
    lambda_argument: LambdaExpr | None = None

    @property
    def arity(self) -> int:
        return len(self.arguments) + (1 if self.lambda_argument is not None else 0)


@dataclass(eq=False)
class NewExpr(Expr):
    type: TypeNode
    arguments: list[Expr] = field(default_factory=list)
    is_array: bool = False


@dataclass(eq=False)
class CastExpr(Expr):
    expression: Expr
    type: TypeNode
    safe: bool = False


@dataclass(eq=False)
class TypeTestExpr(Expr):
    expression: Expr
    type: TypeNode
    negated: bool = False


@dataclass(eq=False)
class LambdaExpr(Expr):
    parameters: list[ParamNode] = field(default_factory=list)
    body: list[Stmt] = field(default_factory=list)


@dataclass(eq=False)
class BinaryExpr(Expr):
    operator: str
    left: Expr
    right: Expr


@dataclass(eq=False)
class UnaryExpr(Expr):
    operator: str
    operand: Expr
    postfix: bool = False


@dataclass(eq=False)
class AssignExpr(Expr):
    operator: str
    target: Expr
    value: Expr


@dataclass(eq=False)
class ConditionalExpr(Expr):
    condition: Expr
    then_branch: Node
    else_branch: Node | None = None


@dataclass(eq=False)
class IndexExpr(Expr):
    target: Expr
    indices: list[Expr] = field(default_factory=list)


@dataclass(eq=False)
class UnknownExpr(Expr):
    """Placeholder for a construct outside the subset that was skipped."""
    description: str = ""


# --- Statements ---

@dataclass(eq=False)
class Stmt(Node):
    pass


@dataclass(eq=False)
class Block(Stmt):
    statements: list[Stmt] = field(default_factory=list)


@dataclass(eq=False)
class ExprStmt(Stmt):
    expression: Expr


@dataclass(eq=False)
class ReturnStmt(Stmt):
    expression: Expr | None = None


@dataclass(eq=False)
class LocalVarNode(Stmt):
    name: str
    type: TypeNode | None = None
    initializer: Expr | None = None
    mutable: bool = True
    entity_id: int | None = None


@dataclass(eq=False)
class WhileStmt(Stmt):
    condition: Expr
    body: Stmt


@dataclass(eq=False)
class ForStmt(Stmt):
    variable: LocalVarNode
    iterable: Expr
    body: Stmt


# --- Declarations ---

@dataclass(eq=False)
class ParamNode(Node):
    name: str
    type: TypeNode | None = None
    default: Expr | None = None
    # 'val' / 'var' on a Kotlin primary-constructor parameter
    property_keyword: str | None = None
    annotations: list[AnnotationNode] = field(default_factory=list)
    modifiers: list[str] = field(default_factory=list)
    entity_id: int | None = None
    property_id: int | None = None


@dataclass(eq=False)
class PropertyNode(Node):
    name: str
    type: TypeNode | None = None
    initializer: Expr | None = None
    delegate: Expr | None = None
    mutable: bool = False
    annotations: list[AnnotationNode] = field(default_factory=list)
    modifiers: list[str] = field(default_factory=list)
    is_enum_constant: bool = False
    arguments: list[Expr] = field(default_factory=list)
    entity_id: int | None = None


@dataclass(eq=False)
class FunctionNode(Node):
    name: str
    parameters: list[ParamNode] = field(default_factory=list)
    return_type: TypeNode | None = None
    receiver: TypeNode | None = None
    body: Block | None = None
    expression_body: Expr | None = None
    annotations: list[AnnotationNode] = field(default_factory=list)
    modifiers: list[str] = field(default_factory=list)
    is_constructor: bool = False
    entity_id: int | None = None


@dataclass(eq=False)
class SupertypeNode(Node):
    type: TypeNode
    # Constructor-call arguments (`Base("circle")`), None when absent
    arguments: list[Expr] | None = None
    delegate: Expr | None = None
    # Java keyword the supertype was listed under ('extends' / 'implements')
    keyword: str | None = None


@dataclass(eq=False)
class ClassNode(Node):
    name: str
    flavor: str  # class | interface | enum | object | annotation
    supertypes: list[SupertypeNode] = field(default_factory=list)
    constructor_parameters: list[ParamNode] | None = None
    members: list[Node] = field(default_factory=list)
    initializers: list[Block] = field(default_factory=list)
    annotations: list[AnnotationNode] = field(default_factory=list)
    modifiers: list[str] = field(default_factory=list)
    entity_id: int | None = None
    constructor_id: int | None = None


@dataclass(eq=False)
class FileNode(Node):
    path: str
    language: SourceLanguage
    package: str | None = None
    imports: list[ImportNode] = field(default_factory=list)
    declarations: list[Node] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)
    entity_id: int | None = None


# The per-language AST roots are the same node class
KotlinAst = FileNode
JavaAst = FileNode
