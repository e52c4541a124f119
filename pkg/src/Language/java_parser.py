from __future__ import annotations

from Controller.custom_exception import SyntaxMismatch
from Language.base_parser import BaseParser
from Language.lexer import CHAR, IDENT, NUMBER, STRING
from Model.object_types import SourceLanguage
from Model.parse_tree import (
    AnnotationNode, AssignExpr, BinaryExpr, Block, CallExpr, CastExpr, ClassNode, ConditionalExpr,
    Expr, ExprStmt, FileNode, FunctionNode, ImportNode, IndexExpr, LocalVarNode, MemberExpr,
    NameExpr, NewExpr, ParamNode, PropertyNode, ReturnStmt, Span, Stmt, SupertypeNode,
    ThisExpr, TypeNode, TypeTestExpr, UnaryExpr, UnknownExpr, WhileStmt,
)

MODIFIERS = frozenset({
    "public", "private", "protected", "static", "final", "abstract", "native", "synchronized",
    "transient", "volatile", "strictfp", "default", "sealed",
})

PRIMITIVES = frozenset({"int", "long", "double", "float", "boolean", "char", "byte", "short", "void"})

ASSIGNMENT_OPERATORS = ("=", "+=", "-=", "*=", "/=", "%=")

# Statements outside the supported subset, skipped as a whole
SKIPPED_STATEMENTS = ("for", "do", "switch", "try", "synchronized")

# Identifiers that never start a local variable type
_EXPRESSION_KEYWORDS = frozenset({"new", "this", "super", "return", "true", "false", "null"})


def parse_java(source: str, path: str, logger=None) -> FileNode:
    """
    Parses one Java source file.

    Args:
        - source: The file contents.
        - path: The file path, recorded in spans and diagnostics.
        - logger: Optional logger.

    Returns:
        - The file's AST. Skipped constructs are listed in its diagnostics.
    """
    return JavaParser(source, path, logger).parse_file()


class JavaParser(BaseParser):
    """
    Recursive-descent parser for the supported Java subset: top-level
    classes, interfaces, enums and annotation types with their fields,
    methods, constructors and initializer blocks.
    """

    def parse_file(self) -> FileNode:
        self.logger.debug(f"Parsing Java file {self.path}")
        file_node = FileNode(self.span(), path=self.path, language=SourceLanguage.JAVA)

        before = self.mark()
        self.parse_modifiers()
        if self.accept("package"):
            file_node.package = self.parse_qualified_name()
            self.expect(";")
        else:
            self.reset(before)

        while self.at("import"):
            file_node.imports.append(self.parse_import())

        while not self.at_end():
            if self.accept(";"):
                continue
            start = self.mark()
            try:
                file_node.declarations.append(self.parse_type_declaration())
            except SyntaxMismatch as error:
                self.reset(start)
                self.diagnose(f"Skipped unsupported declaration: {error.message}")
                self._skip_statement_tokens()

        file_node.span = Span(1, 1, self.token.line)
        file_node.diagnostics = self.diagnostics
        return file_node


    def parse_import(self) -> ImportNode:
        start = self.span()
        self.expect("import")
        is_static = self.accept("static") is not None
        path = self.parse_qualified_name()
        wildcard = False
        if self.at(".") and self.peek().text == "*":
            self.advance()
            self.advance()
            wildcard = True
        self.expect(";")
        return ImportNode(self.close_span(start), path=path, wildcard=wildcard, is_static=is_static)


    # --- recovery ---

    def _skip_statement_tokens(self) -> None:
        """Skips balanced units through the next ';' or the end of a braced body."""
        while not self.at_end() and not self.at("}"):
            if self.accept(";"):
                return
            if self.at("{"):
                self.skip_balanced()
                if self.at("else", "catch", "finally", "while"):
                    continue
                return
            self.skip_balanced()

    def _skip_construct(self) -> None:
        keyword = self.advance()
        while not self.at_end():
            if self.at("{"):
                self.skip_balanced()
                if self.at("catch", "finally") or (keyword.text == "do" and self.at("while")):
                    continue
                break
            if self.accept(";") or self.at("}"):
                break
            self.skip_balanced()
        self.diagnose(f"Skipped unsupported '{keyword.text}' statement", keyword)


    # --- declarations ---

    def parse_modifiers(self) -> tuple[list[AnnotationNode], list[str]]:
        annotations, modifiers = [], []
        while True:
            if self.at("@") and self.peek().text != "interface":
                annotations.append(self.parse_annotation())
            elif self.at_ident() and self.token.text in MODIFIERS:
                modifiers.append(self.advance().text)
            else:
                return annotations, modifiers

    def parse_annotation(self) -> AnnotationNode:
        start = self.span()
        self.expect("@")
        name = self.parse_qualified_name()
        if self.at("("):
            self.skip_balanced()
        return AnnotationNode(self.close_span(start), name=name)


    def parse_type_declaration(self) -> ClassNode:
        start = self.span()
        annotations, modifiers = self.parse_modifiers()
        if self.at("@") and self.peek().text == "interface":
            self.advance()
            self.advance()
            flavor = "annotation"
        elif self.accept("class"):
            flavor = "class"
        elif self.accept("interface"):
            flavor = "interface"
        elif self.accept("enum"):
            flavor = "enum"
        else:
            self.fail("Expected a class, interface or enum declaration")

        name = self.expect_ident().text
        self.skip_type_arguments()

        supertypes = []
        if self.accept("extends"):
            supertypes.extend(self._parse_supertype_list("extends"))
        if self.accept("implements"):
            supertypes.extend(self._parse_supertype_list("implements"))
        if self.accept("permits"):
            self._parse_supertype_list("permits")

        node = ClassNode(start, name=name, flavor=flavor, supertypes=supertypes, annotations=annotations, modifiers=modifiers)
        self.parse_class_body(node)
        node.span = self.close_span(start)
        return node


    def _parse_supertype_list(self, keyword: str) -> list[SupertypeNode]:
        supertypes = []
        while True:
            supertype = self.parse_type()
            supertypes.append(SupertypeNode(supertype.span, type=supertype, keyword=keyword))
            if not self.accept(","):
                return supertypes


    def parse_class_body(self, node: ClassNode) -> None:
        self.expect("{")
        if node.flavor == "enum":
            self.parse_enum_constants(node)

        while not self.at("}") and not self.at_end():
            if self.accept(";"):
                continue
            start = self.mark()
            try:
                self.parse_member(node)
            except SyntaxMismatch as error:
                self.reset(start)
                self.diagnose(f"Skipped unsupported member: {error.message}")
                self._skip_statement_tokens()
        self.expect("}")


    def parse_enum_constants(self, node: ClassNode) -> None:
        while self.at_ident() or self.at("@"):
            start = self.span()
            while self.at("@"):
                self.parse_annotation()
            name = self.expect_ident().text
            arguments = self.parse_arguments() if self.at("(") else []
            if self.at("{"):
                self.diagnose(f"Skipped body of enum constant '{name}'")
                self.skip_balanced()
            node.members.append(PropertyNode(self.close_span(start), name=name, is_enum_constant=True, arguments=arguments))
            if not self.accept(","):
                break
        self.accept(";")


    def parse_member(self, node: ClassNode) -> None:
        """Parses one member and appends it to the class node."""
        start = self.span()
        annotations, modifiers = self.parse_modifiers()

        if self.at("{"):
            node.initializers.append(self.parse_block())
            return
        if self.at("class", "interface", "enum", "record") or (self.at("@") and self.peek().text == "interface"):
            self.fail("Nested types are not supported")
        self.skip_type_arguments()

        # Constructor
        if self.at_ident() and self.token.text == node.name and self.peek().text == "(":
            self.advance()
            parameters = self.parse_parameters()
            self._skip_throws()
            body = self.parse_block()
            node.members.append(FunctionNode(
                self.close_span(start), name=node.name, parameters=parameters, body=body,
                annotations=annotations, modifiers=modifiers, is_constructor=True,
            ))
            return

        member_type = self.parse_type()
        name = self.expect_ident().text

        if self.at("("):
            parameters = self.parse_parameters()
            self._skip_dimensions()
            self._skip_throws()
            body = None
            if self.at("{"):
                body = self.parse_block()
            else:
                if self.accept("default"):
                    self.parse_expression()
                self.expect(";")
            node.members.append(FunctionNode(
                self.close_span(start), name=name, parameters=parameters, return_type=member_type,
                body=body, annotations=annotations, modifiers=modifiers,
            ))
            return

        mutable = "final" not in modifiers
        while True:
            self._skip_dimensions()
            initializer = self.parse_variable_initializer() if self.accept("=") else None
            node.members.append(PropertyNode(
                self.close_span(start), name=name, type=member_type, initializer=initializer,
                mutable=mutable, annotations=annotations, modifiers=modifiers,
            ))
            if not self.accept(","):
                break
            name = self.expect_ident().text
        self.expect(";")


    def parse_parameters(self) -> list[ParamNode]:
        self.expect("(")
        parameters = []
        while not self.at(")"):
            start = self.span()
            annotations, modifiers = self.parse_modifiers()
            parameter_type = self.parse_type()
            if self.accept("..."):
                modifiers.append("varargs")
            name = self.expect_ident().text
            self._skip_dimensions()
            parameters.append(ParamNode(
                self.close_span(start), name=name, type=parameter_type,
                annotations=annotations, modifiers=modifiers,
            ))
            if not self.accept(","):
                break
        self.expect(")")
        return parameters


    def _skip_throws(self) -> None:
        if self.accept("throws"):
            self.parse_type()
            while self.accept(","):
                self.parse_type()

    def _skip_dimensions(self) -> None:
        while self.at("[") and self.peek().text == "]":
            self.advance()
            self.advance()


    def parse_type(self) -> TypeNode:
        start = self.span()
        while self.at("@"):
            self.parse_annotation()
        if self.at("?"):
            # Wildcards only occur inside skipped type arguments
            self.fail("Unexpected wildcard type")
        parts = [self.expect_ident().text]
        self.skip_type_arguments()
        while self.at(".") and self.peek().kind == IDENT:
            self.advance()
            parts.append(self.advance().text)
            self.skip_type_arguments()
        self._skip_dimensions()
        return TypeNode(self.close_span(start), name=".".join(parts))


    # --- statements ---

    def parse_block(self) -> Block:
        start = self.span()
        self.expect("{")
        statements = []
        while not self.at("}") and not self.at_end():
            before = self.mark()
            try:
                statement = self.parse_statement()
            except SyntaxMismatch as error:
                self.reset(before)
                self.diagnose(f"Skipped unsupported statement: {error.message}")
                self._skip_statement_tokens()
                continue
            if isinstance(statement, list):
                statements.extend(statement)
            elif statement is not None:
                statements.append(statement)
        self.expect("}")
        return Block(self.close_span(start), statements=statements)


    def parse_statement(self) -> Stmt | list[Stmt] | None:
        start = self.span()
        if self.accept(";"):
            return None
        if self.at("{"):
            return self.parse_block()
        if self.accept("return"):
            expression = None if self.at(";") else self.parse_expression()
            self.expect(";")
            return ReturnStmt(self.close_span(start), expression=expression)
        if self.accept("if"):
            condition = self._parse_condition()
            then_branch = self._statement_node(start)
            else_branch = self._statement_node(start) if self.accept("else") else None
            conditional = ConditionalExpr(self.close_span(start), condition=condition, then_branch=then_branch, else_branch=else_branch)
            return ExprStmt(conditional.span, expression=conditional)
        if self.accept("while"):
            condition = self._parse_condition()
            body = self._statement_node(start)
            return WhileStmt(self.close_span(start), condition=condition, body=body)
        if self.accept("throw"):
            expression = self.parse_expression()
            self.expect(";")
            return ExprStmt(self.close_span(start), expression=expression)
        if self.at("break", "continue"):
            self.advance()
            if self.at_ident():
                self.advance()
            self.expect(";")
            return None
        if self.at(*SKIPPED_STATEMENTS):
            self._skip_construct()
            return None
        if self.at("class", "interface", "enum"):
            self.fail("Local types are not supported")

        declarations = self._try_local_variables()
        if declarations is not None:
            return declarations

        expression = self.parse_expression()
        if self.at(*ASSIGNMENT_OPERATORS):
            operator = self.advance().text
            value = self.parse_expression()
            expression = AssignExpr(self.close_span(start), operator=operator, target=expression, value=value)
        self.expect(";")
        return ExprStmt(self.close_span(start), expression=expression)


    def _parse_condition(self) -> Expr:
        self.expect("(")
        condition = self.parse_expression()
        self.expect(")")
        return condition

    def _statement_node(self, start: Span) -> Stmt:
        statement = self.parse_statement()
        if isinstance(statement, list):
            return Block(self.close_span(start), statements=statement)
        return statement if statement is not None else Block(self.close_span(start))


    def _try_local_variables(self) -> list[LocalVarNode] | None:
        """Parses `[final] Type name [= init], ...;` or returns None without consuming."""
        before = self.mark()
        start = self.span()
        try:
            _, modifiers = self.parse_modifiers()
            if not self.at_ident() or self.token.text in _EXPRESSION_KEYWORDS:
                self.reset(before)
                return None
            variable_type = self.parse_type()
            if not (self.at_ident() and self.peek().text in ("=", ";", ",", "[", ":")):
                self.reset(before)
                return None
        except SyntaxMismatch:
            self.reset(before)
            return None

        # `var` declares an inferred local
        if variable_type.name == "var":
            variable_type = None
        mutable = "final" not in modifiers
        declarations = []
        while True:
            name = self.expect_ident().text
            self._skip_dimensions()
            initializer = self.parse_variable_initializer() if self.accept("=") else None
            declarations.append(LocalVarNode(
                self.close_span(start), name=name, type=variable_type, initializer=initializer, mutable=mutable,
            ))
            if not self.accept(","):
                break
        self.expect(";")
        return declarations


    def parse_variable_initializer(self) -> Expr:
        if self.at("{"):
            start = self.span()
            self.skip_balanced()
            return UnknownExpr(self.close_span(start), description="array initializer")
        return self.parse_expression()


    # --- expressions ---

    def parse_expression(self) -> Expr:
        return self.parse_ternary()

    def parse_ternary(self) -> Expr:
        condition = self.parse_binary(0)
        if not self.accept("?"):
            return condition
        then_branch = self.parse_expression()
        self.expect(":")
        else_branch = self.parse_ternary()
        return ConditionalExpr(condition.span, condition=condition, then_branch=then_branch, else_branch=else_branch)


    _BINARY_LEVELS = (
        ("||",), ("&&",), ("|",), ("^",), ("&",), ("==", "!="),
        ("<", ">", "<=", ">=", "instanceof"), ("+", "-"), ("*", "/", "%"),
    )

    def parse_binary(self, level: int) -> Expr:
        if level == len(self._BINARY_LEVELS):
            return self.parse_unary()
        operators = self._BINARY_LEVELS[level]
        left = self.parse_binary(level + 1)
        while self.at(*operators):
            operator = self.advance().text
            if operator == "instanceof":
                self.accept("final")
                tested = self.parse_type()
                if self.at_ident():
                    self.advance()  # pattern binding
                left = TypeTestExpr(left.span, expression=left, type=tested)
                continue
            right = self.parse_binary(level + 1)
            left = BinaryExpr(left.span, operator=operator, left=left, right=right)
        return left


    def parse_unary(self) -> Expr:
        start = self.span()
        if self.at("!", "-", "+", "~", "++", "--"):
            operator = self.advance().text
            operand = self.parse_unary()
            return UnaryExpr(self.close_span(start), operator=operator, operand=operand)
        if self.at("(") and self._at_cast():
            self.advance()
            target = self.parse_type()
            self.expect(")")
            operand = self.parse_unary()
            return CastExpr(self.close_span(start), expression=operand, type=target)
        return self.parse_postfix()


    def _at_cast(self) -> bool:
        """Distinguishes `(Type) operand` from a parenthesized expression."""
        before = self.mark()
        try:
            self.advance()
            if not self.at_ident():
                return False
            primitive = self.token.text in PRIMITIVES
            self.parse_type()
            if not self.accept(")"):
                return False
            if primitive:
                return True
            token = self.token
            if token.kind in (IDENT, NUMBER, STRING, CHAR):
                return token.text != "instanceof"
            return self.at("(", "!", "~")
        except SyntaxMismatch:
            return False
        finally:
            self.reset(before)


    def parse_postfix(self) -> Expr:
        expression = self.parse_primary()
        while True:
            if self.at(".") and self.peek().text == "new":
                self.fail("Qualified inner class creation is not supported")
            if self.accept("."):
                self.skip_type_arguments()
                name = self.expect_ident().text
                member = MemberExpr(expression.span, target=expression, name=name)
                if self.at("("):
                    expression = CallExpr(expression.span, callee=member, arguments=self.parse_arguments())
                else:
                    expression = member
            elif self.at("["):
                self.advance()
                index = self.parse_expression()
                self.expect("]")
                expression = IndexExpr(expression.span, target=expression, indices=[index])
            elif self.at("++", "--"):
                operator = self.advance().text
                expression = UnaryExpr(expression.span, operator=operator, operand=expression, postfix=True)
            elif self.at("::"):
                self.advance()
                reference = self.advance().text
                expression = UnknownExpr(expression.span, description=f"::{reference}")
            else:
                return expression


    def parse_primary(self) -> Expr:
        start = self.span()
        literal = self.parse_literal()
        if literal is not None:
            return literal

        if self.at("this", "super"):
            is_super = self.advance().text == "super"
            if self.at("("):
                # Explicit constructor invocation
                self.parse_arguments()
                return UnknownExpr(self.close_span(start), description="super()" if is_super else "this()")
            return ThisExpr(self.close_span(start), is_super=is_super)
        if self.at("new"):
            return self.parse_creator()
        if self.at("("):
            self.advance()
            expression = self.parse_expression()
            self.expect(")")
            return expression
        if self.at_ident():
            if self.token.text in PRIMITIVES and self.peek().text in (".", "["):
                # int.class, int[].class
                self.advance()
                self._skip_dimensions()
                return UnknownExpr(self.close_span(start), description="class literal")
            name = NameExpr(start, name=self.advance().text)
            if self.at("("):
                return CallExpr(start, callee=name, arguments=self.parse_arguments())
            return name
        self.fail("Expected an expression")


    def parse_creator(self) -> NewExpr:
        start = self.span()
        self.expect("new")
        type_start = self.span()
        parts = [self.expect_ident().text]
        self.skip_type_arguments()
        while self.at(".") and self.peek().kind == IDENT:
            self.advance()
            parts.append(self.advance().text)
            self.skip_type_arguments()
        created = TypeNode(self.close_span(type_start), name=".".join(parts))

        if self.at("["):
            dimensions = []
            while self.at("["):
                if self.peek().text == "]":
                    self.advance()
                    self.advance()
                    continue
                self.advance()
                dimensions.append(self.parse_expression())
                self.expect("]")
            if self.at("{"):
                self.skip_balanced()
            return NewExpr(self.close_span(start), type=created, arguments=dimensions, is_array=True)

        arguments = self.parse_arguments()
        if self.at("{"):
            self.diagnose("Skipped anonymous class body")
            self.skip_balanced()
        return NewExpr(self.close_span(start), type=created, arguments=arguments)


    def parse_arguments(self) -> list[Expr]:
        self.expect("(")
        arguments = []
        while not self.at(")"):
            arguments.append(self.parse_expression())
            if not self.accept(","):
                break
        self.expect(")")
        return arguments
