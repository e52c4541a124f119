from __future__ import annotations

from Controller.custom_exception import SyntaxMismatch
from Language.base_parser import BaseParser
from Language.lexer import IDENT
from Model.object_types import SourceLanguage
from Model.parse_tree import (
    AnnotationNode, AssignExpr, BinaryExpr, Block, CallExpr, CastExpr, ClassNode, ConditionalExpr,
    Expr, ExprStmt, FileNode, ForStmt, FunctionNode, ImportNode, IndexExpr, LambdaExpr, LocalVarNode,
    MemberExpr, NameExpr, Node, ParamNode, PropertyNode, ReturnStmt, Span, Stmt, SupertypeNode,
    ThisExpr, TypeNode, TypeTestExpr, UnaryExpr, UnknownExpr, WhileStmt,
)

MODIFIERS = frozenset({
    "public", "private", "protected", "internal", "open", "final", "abstract", "sealed", "data",
    "enum", "annotation", "companion", "inner", "override", "lateinit", "const", "inline",
    "noinline", "crossinline", "vararg", "suspend", "operator", "infix", "tailrec", "external",
    "expect", "actual", "value",
})

DECLARATION_KEYWORDS = frozenset({"class", "interface", "object", "fun", "val", "var", "typealias", "init", "constructor"})

ASSIGNMENT_OPERATORS = ("=", "+=", "-=", "*=", "/=", "%=")

# Constructs outside the supported subset, skipped as a whole
SKIPPED_EXPRESSIONS = frozenset({"when", "try", "object", "do"})


def parse_kotlin(source: str, path: str, logger=None) -> FileNode:
    """
    Parses one Kotlin source file.

    Args:
        - source: The file contents.
        - path: The file path, recorded in spans and diagnostics.
        - logger: Optional logger.

    Returns:
        - The file's AST. Skipped constructs are listed in its diagnostics.

    Raises:
        - ParseError: When the file is not lexically well formed.
    """
    return KotlinParser(source, path, logger).parse_file()


class KotlinParser(BaseParser):
    """
    Recursive-descent parser for the supported Kotlin subset.

    Statements end at a line break or a semicolon, so call parentheses,
    trailing lambdas and most binary operators must stay on the line of
    their left operand. A construct the parser does not support is skipped
    token-balanced and reported as a diagnostic.
    """
    def __init__(self, source: str, path: str, logger=None):
        super().__init__(source, path, logger)
        self.allow_trailing_lambda = True


    def parse_file(self) -> FileNode:
        self.logger.debug(f"Parsing Kotlin file {self.path}")
        file_node = FileNode(self.span(), path=self.path, language=SourceLanguage.KOTLIN)
        while self.at("@") and self.peek().text == "file" and self.peek(2).text == ":":
            self.parse_annotation()

        if self.accept("package"):
            file_node.package = self.parse_qualified_name()
            self.accept(";")

        while self.at("import"):
            file_node.imports.append(self.parse_import())

        while not self.at_end():
            if self.accept(";"):
                continue
            declaration = self._declaration_or_skip()
            if declaration is not None:
                file_node.declarations.append(declaration)

        file_node.span = Span(1, 1, self.token.line)
        file_node.diagnostics = self.diagnostics
        return file_node


    def parse_import(self) -> ImportNode:
        start = self.span()
        self.expect("import")
        path = self.parse_qualified_name()
        wildcard = False
        if self.at(".") and self.peek().text == "*":
            self.advance()
            self.advance()
            wildcard = True
        alias = self.expect_ident().text if self.accept("as") else None
        self.accept(";")
        return ImportNode(self.close_span(start), path=path, wildcard=wildcard, alias=alias)


    # --- recovery ---

    def _declaration_or_skip(self) -> Node | None:
        start = self.mark()
        try:
            return self.parse_declaration()
        except SyntaxMismatch as error:
            self.reset(start)
            self.diagnose(f"Skipped unsupported declaration: {error.message}")
            self._skip_line_construct()
            return None

    def _statement_or_skip(self) -> Stmt | None:
        start = self.mark()
        try:
            statement = self.parse_statement()
            self._end_statement()
            return statement
        except SyntaxMismatch as error:
            self.reset(start)
            self.diagnose(f"Skipped unsupported statement: {error.message}")
            self._skip_line_construct()
            return None

    def _skip_line_construct(self) -> None:
        """Skips balanced units up to the next line break, ';' or closing '}'."""
        self.skip_balanced()
        while not self.at_end() and not self.at("}") and not self.token.newline_before:
            if self.accept(";"):
                return
            self.skip_balanced()

    def _skip_construct(self) -> UnknownExpr:
        """Skips a when/try/do/object construct with its trailing blocks."""
        start = self.span()
        keyword = self.advance()
        seen_group = False
        while not self.at_end():
            if seen_group and self.token.newline_before and not self.at("catch", "finally", "else"):
                break
            if self.at("{"):
                self.skip_balanced()
                seen_group = True
                if self.at("catch", "finally") or (keyword.text == "do" and self.at("while")):
                    continue
                break
            if self.at("(", "["):
                self.skip_balanced()
                seen_group = True
                continue
            if self.at(";", ")", "}", "]", ","):
                break
            self.advance()
        self.diagnose(f"Skipped unsupported '{keyword.text}' construct", keyword)
        return UnknownExpr(self.close_span(start), description=keyword.text)

    def _end_statement(self) -> None:
        if self.accept(";") or self.at("}") or self.at_end() or self.token.newline_before:
            return
        self.fail("Expected the end of the statement")


    # --- modifiers and annotations ---

    def parse_modifiers(self) -> tuple[list[AnnotationNode], list[str]]:
        annotations, modifiers = [], []
        while True:
            if self.at("@"):
                annotations.append(self.parse_annotation())
            elif self.at_ident() and self.token.text in MODIFIERS \
                    and (self.peek().kind == IDENT or self.peek().text == "@"):
                modifiers.append(self.advance().text)
            else:
                return annotations, modifiers

    def parse_annotation(self) -> AnnotationNode:
        start = self.span()
        self.expect("@")
        if self.at("["):
            self.skip_balanced()
            return AnnotationNode(self.close_span(start), name="")
        # Use-site targets: @get:Foo, @file:JvmName
        if self.at_ident() and self.peek().text == ":":
            self.advance()
            self.advance()
        name = self.parse_qualified_name()
        self.skip_type_arguments()
        if self.at("(") and not self.token.newline_before:
            self.skip_balanced()
        return AnnotationNode(self.close_span(start), name=name)

    def _at_declaration_start(self) -> bool:
        return self.at("@") or (self.at_ident() and (self.token.text in DECLARATION_KEYWORDS or self.token.text in MODIFIERS))


    # --- declarations ---

    def parse_declaration(self) -> Node | None:
        start = self.span()
        annotations, modifiers = self.parse_modifiers()

        if "companion" in modifiers and self.at("object"):
            self.diagnose("Skipped companion object")
            self._skip_line_construct()
            return None
        if self.at("class", "interface", "object"):
            return self.parse_class(start, annotations, modifiers)
        if self.at("fun"):
            return self.parse_function(start, annotations, modifiers)
        if self.at("val", "var"):
            return self.parse_property(start, annotations, modifiers)
        if self.at("constructor"):
            self.diagnose("Skipped secondary constructor")
            self._skip_line_construct()
            return None
        if self.at("typealias"):
            self.diagnose("Skipped type alias")
            self._skip_line_construct()
            return None
        self.fail("Expected a declaration")


    def parse_class(self, start: Span, annotations, modifiers) -> ClassNode:
        keyword = self.advance().text
        if keyword == "interface":
            flavor = "interface"
        elif keyword == "object":
            flavor = "object"
        elif "enum" in modifiers:
            flavor = "enum"
        elif "annotation" in modifiers:
            flavor = "annotation"
        else:
            flavor = "class"

        name = self.expect_ident().text
        self.skip_type_arguments()

        # Primary constructor, optionally with modifiers and the keyword
        constructor_parameters = None
        before = self.mark()
        self.parse_modifiers()
        if self.accept("constructor") or self.at("("):
            if not self.at("("):
                self.fail("Expected constructor parameters")
            constructor_parameters = self.parse_parameters(class_parameters=True)
        else:
            self.reset(before)

        supertypes = []
        if self.accept(":"):
            supertypes.append(self.parse_supertype())
            while self.accept(","):
                supertypes.append(self.parse_supertype())
        if self.accept("where"):
            while not self.at_end() and not self.at("{") and not self.token.newline_before:
                self.advance()

        node = ClassNode(
            start, name=name, flavor=flavor, supertypes=supertypes,
            constructor_parameters=constructor_parameters, annotations=annotations, modifiers=modifiers,
        )
        if self.at("{"):
            self.parse_class_body(node)
        node.span = self.close_span(start)
        return node


    def parse_supertype(self) -> SupertypeNode:
        start = self.span()
        supertype = self.parse_type()
        arguments = None
        if self.at("(") and not self.token.newline_before:
            arguments = self.parse_arguments()
        delegate = None
        if self.accept("by"):
            delegate = self.parse_expression(allow_trailing_lambda=False)
        return SupertypeNode(self.close_span(start), type=supertype, arguments=arguments, delegate=delegate)


    def parse_class_body(self, node: ClassNode) -> None:
        self.expect("{")
        if node.flavor == "enum":
            self.parse_enum_entries(node)

        while not self.at("}") and not self.at_end():
            if self.accept(";"):
                continue
            if self.at("init") and self.peek().text == "{":
                self.advance()
                node.initializers.append(self.parse_block())
                continue
            member = self._declaration_or_skip()
            if member is not None:
                node.members.append(member)
        self.expect("}")


    def parse_enum_entries(self, node: ClassNode) -> None:
        while self.at_ident() and not self._at_declaration_start():
            start = self.span()
            name = self.advance().text
            arguments = self.parse_arguments() if self.at("(") else []
            if self.at("{"):
                self.diagnose(f"Skipped body of enum entry '{name}'")
                self.skip_balanced()
            node.members.append(PropertyNode(
                self.close_span(start), name=name, is_enum_constant=True, arguments=arguments,
            ))
            if not self.accept(","):
                break
        self.accept(";")


    def parse_function(self, start: Span, annotations, modifiers) -> FunctionNode:
        self.expect("fun")
        self.skip_type_arguments()
        receiver, name = self._parse_receiver_and_name()
        parameters = self.parse_parameters()
        return_type = self.parse_type() if self.accept(":") else None
        if self.at("where"):
            while not self.at_end() and not self.at("{", "="):
                self.advance()

        body = expression_body = None
        if self.at("{"):
            body = self.parse_block()
        elif self.accept("="):
            expression_body = self.parse_expression()

        return FunctionNode(
            self.close_span(start), name=name, parameters=parameters, return_type=return_type,
            receiver=receiver, body=body, expression_body=expression_body,
            annotations=annotations, modifiers=modifiers,
        )


    def _parse_receiver_and_name(self) -> tuple[TypeNode | None, str]:
        """Parses `Name`, `Receiver.name` or `pkg.Receiver?.name`."""
        start = self.span()
        segments = [self.expect_ident().text]
        self.skip_type_arguments()
        nullable = False
        while True:
            if self.at("?.") and self.peek().kind == IDENT:
                self.advance()
                nullable = True
            elif self.at(".") and self.peek().kind == IDENT:
                self.advance()
            else:
                break
            segments.append(self.advance().text)
            self.skip_type_arguments()

        if len(segments) == 1:
            return None, segments[0]
        receiver = TypeNode(start, name=".".join(segments[:-1]), nullable=nullable)
        return receiver, segments[-1]


    def parse_parameters(self, class_parameters: bool = False) -> list[ParamNode]:
        self.expect("(")
        parameters = []
        while not self.at(")"):
            parameters.append(self.parse_parameter(class_parameters))
            if not self.accept(","):
                break
        self.expect(")")
        return parameters


    def parse_parameter(self, class_parameter: bool) -> ParamNode:
        start = self.span()
        annotations, modifiers = self.parse_modifiers()
        keyword = None
        if class_parameter and self.at("val", "var"):
            keyword = self.advance().text
        name = self.expect_ident().text
        parameter_type = self.parse_type() if self.accept(":") else None
        default = self.parse_expression() if self.accept("=") else None
        return ParamNode(
            self.close_span(start), name=name, type=parameter_type, default=default,
            property_keyword=keyword, annotations=annotations, modifiers=modifiers,
        )


    def parse_property(self, start: Span, annotations, modifiers) -> PropertyNode:
        mutable = self.advance().text == "var"
        self.skip_type_arguments()
        receiver, name = self._parse_receiver_and_name()
        if receiver is not None:
            self.diagnose(f"Extension property '{name}' is recorded as a plain property")

        property_type = self.parse_type() if self.accept(":") else None
        initializer = delegate = None
        if self.accept("="):
            initializer = self.parse_expression()
        elif self.accept("by"):
            delegate = self.parse_expression()
        self._skip_accessors()

        return PropertyNode(
            self.close_span(start), name=name, type=property_type, initializer=initializer,
            delegate=delegate, mutable=mutable, annotations=annotations, modifiers=modifiers,
        )


    def _skip_accessors(self) -> None:
        """Skips custom getters and setters following a property."""
        while True:
            before = self.mark()
            self.parse_modifiers()
            if not self.at("get", "set"):
                self.reset(before)
                return
            self.advance()
            if not self.at("("):
                continue
            self.skip_balanced()
            if self.accept(":"):
                self.parse_type()
            if self.at("{"):
                self.skip_balanced()
            elif self.accept("="):
                self.parse_expression()


    # --- types ---

    def parse_type(self) -> TypeNode:
        start = self.span()
        while self.at("@"):
            self.parse_annotation()
        if self.at("suspend") and self.peek().text == "(":
            self.advance()

        if self.at("("):
            parameters = self._parse_function_type_parameters()
            if self.accept("->"):
                node = self._function_type(start, None, parameters)
            elif len(parameters) == 1:
                node = parameters[0]
            else:
                self.fail("Expected '->' in function type")
        else:
            parts = [self.expect_ident().text]
            self.skip_type_arguments()
            while self.at(".") and self.peek().kind == IDENT:
                self.advance()
                parts.append(self.advance().text)
                self.skip_type_arguments()
            name = ".".join(parts)

            if self.at(".") and self.peek().text == "(":
                # Function type with receiver: Bar.() -> Int
                self.advance()
                receiver = TypeNode(start, name=name)
                parameters = self._parse_function_type_parameters()
                self.expect("->")
                node = self._function_type(start, receiver, parameters)
            else:
                node = TypeNode(self.close_span(start), name=name)

        if self.at("?") and not self.token.newline_before:
            self.advance()
            node.nullable = True
        return node

    def _function_type(self, start: Span, receiver, parameters) -> TypeNode:
        result = self.parse_type()
        node = TypeNode(
            self.close_span(start), name="", is_function=True,
            receiver=receiver, parameters=parameters, result=result,
        )
        node.name = node.text()
        return node

    def _parse_function_type_parameters(self) -> list[TypeNode]:
        self.expect("(")
        parameters = []
        while not self.at(")"):
            if self.at_ident() and self.peek().text == ":":
                self.advance()
                self.advance()
            parameters.append(self.parse_type())
            if not self.accept(","):
                break
        self.expect(")")
        return parameters


    # --- statements ---

    def parse_block(self) -> Block:
        start = self.span()
        self.expect("{")
        statements = []
        while not self.at("}") and not self.at_end():
            if self.accept(";"):
                continue
            statement = self._statement_or_skip()
            if statement is not None:
                statements.append(statement)
        self.expect("}")
        return Block(self.close_span(start), statements=statements)


    def parse_statement(self) -> Stmt | None:
        start = self.span()
        while self.at("@"):
            self.parse_annotation()

        if self.at("val", "var"):
            return self.parse_local_variable()
        if self.at("return"):
            self.advance()
            self._skip_label()
            expression = None
            if not (self.at("}", ";") or self.at_end() or self.token.newline_before):
                expression = self.parse_expression()
            return ReturnStmt(self.close_span(start), expression=expression)
        if self.at("while"):
            self.advance()
            self.expect("(")
            condition = self.parse_expression()
            self.expect(")")
            body = self.parse_control_body()
            return WhileStmt(self.close_span(start), condition=condition, body=body)
        if self.at("for"):
            return self.parse_for(start)
        if self.at("throw"):
            self.advance()
            return ExprStmt(self.close_span(start), expression=self.parse_expression())
        if self.at("break", "continue"):
            self.advance()
            self._skip_label()
            return None
        if self.at("fun", "class", "interface", "typealias") or (self.at("object") and self.peek().kind == IDENT):
            self.fail("Local declarations are not supported")

        expression = self.parse_expression()
        if self.at(*ASSIGNMENT_OPERATORS):
            operator = self.advance().text
            value = self.parse_expression()
            expression = AssignExpr(self.close_span(start), operator=operator, target=expression, value=value)
        return ExprStmt(self.close_span(start), expression=expression)


    def parse_control_body(self) -> Stmt | None:
        if self.at("{"):
            return self.parse_block()
        return self.parse_statement()


    def parse_local_variable(self) -> LocalVarNode:
        start = self.span()
        mutable = self.advance().text == "var"
        if self.at("("):
            self.fail("Destructuring declarations are not supported")
        name = self.expect_ident().text
        variable_type = self.parse_type() if self.accept(":") else None
        initializer = None
        if self.accept("=") or self.accept("by"):
            initializer = self.parse_expression()
        return LocalVarNode(self.close_span(start), name=name, type=variable_type, initializer=initializer, mutable=mutable)


    def parse_for(self, start: Span) -> ForStmt:
        self.expect("for")
        self.expect("(")
        variable_start = self.span()
        if self.at("("):
            self.fail("Destructuring declarations are not supported")
        name = self.expect_ident().text
        variable_type = self.parse_type() if self.accept(":") else None
        variable = LocalVarNode(self.close_span(variable_start), name=name, type=variable_type, mutable=False)
        self.expect("in")
        iterable = self.parse_expression()
        self.expect(")")
        body = self.parse_control_body()
        return ForStmt(self.close_span(start), variable=variable, iterable=iterable, body=body)


    def _skip_label(self) -> None:
        if self.at("@") and not self.token.newline_before:
            self.advance()
            self.expect_ident()


    # --- expressions ---

    def parse_expression(self, allow_trailing_lambda: bool = True) -> Expr:
        saved = self.allow_trailing_lambda
        self.allow_trailing_lambda = allow_trailing_lambda
        try:
            return self.parse_disjunction()
        finally:
            self.allow_trailing_lambda = saved

    def _binary(self, operand, operators: tuple[str, ...], same_line: bool = False) -> Expr:
        left = operand()
        while self.at(*operators) and not (same_line and self.token.newline_before):
            operator = self.advance().text
            right = operand()
            left = BinaryExpr(left.span, operator=operator, left=left, right=right)
        return left

    def parse_disjunction(self) -> Expr:
        return self._binary(self.parse_conjunction, ("||",))

    def parse_conjunction(self) -> Expr:
        return self._binary(self.parse_equality, ("&&",))

    def parse_equality(self) -> Expr:
        return self._binary(self.parse_comparison, ("==", "!=", "===", "!=="))

    def parse_comparison(self) -> Expr:
        return self._binary(self.parse_type_check, ("<", ">", "<=", ">="), same_line=True)

    def parse_type_check(self) -> Expr:
        left = self.parse_elvis()
        while not self.token.newline_before:
            negated = self.at("!") and self.peek().text in ("is", "in")
            if negated:
                self.advance()
            if self.accept("is"):
                left = TypeTestExpr(left.span, expression=left, type=self.parse_type(), negated=negated)
            elif self.accept("in"):
                right = self.parse_elvis()
                left = BinaryExpr(left.span, operator="!in" if negated else "in", left=left, right=right)
            else:
                break
        return left

    def parse_elvis(self) -> Expr:
        return self._binary(self.parse_range, ("?:",))

    def parse_range(self) -> Expr:
        return self._binary(self.parse_additive, ("..",), same_line=True)

    def parse_additive(self) -> Expr:
        return self._binary(self.parse_multiplicative, ("+", "-"), same_line=True)

    def parse_multiplicative(self) -> Expr:
        return self._binary(self.parse_cast, ("*", "/", "%"), same_line=True)

    def parse_cast(self) -> Expr:
        expression = self.parse_prefix()
        while self.at("as") and not self.token.newline_before:
            self.advance()
            safe = self.accept("?") is not None
            target = self.parse_type()
            expression = CastExpr(expression.span, expression=expression, type=target, safe=safe)
        return expression

    def parse_prefix(self) -> Expr:
        start = self.span()
        if self.at("!", "-", "+", "++", "--"):
            operator = self.advance().text
            operand = self.parse_prefix()
            return UnaryExpr(self.close_span(start), operator=operator, operand=operand)
        # Labelled expression: loop@ for (...)
        if self.at_ident() and self.peek().text == "@" and not self.peek().newline_before \
                and self.peek(2).kind == IDENT and self.peek(2).text in ("for", "while", "do"):
            self.advance()
            self.advance()
        while self.at("@"):
            self.parse_annotation()
        return self.parse_postfix()


    def parse_postfix(self) -> Expr:
        expression = self.parse_primary()
        while True:
            same_line = not self.token.newline_before
            if self.at("(") and same_line:
                arguments = self.parse_arguments()
                lambda_argument = None
                if self.at("{") and not self.token.newline_before and self.allow_trailing_lambda:
                    lambda_argument = self.parse_lambda()
                expression = CallExpr(expression.span, callee=expression, arguments=arguments, lambda_argument=lambda_argument)
            elif self.at("{") and same_line and self.allow_trailing_lambda and isinstance(expression, (NameExpr, MemberExpr)):
                expression = CallExpr(expression.span, callee=expression, lambda_argument=self.parse_lambda())
            elif self.at("<") and same_line and isinstance(expression, (NameExpr, MemberExpr)) and self._at_call_type_arguments():
                self.skip_type_arguments()
            elif self.at(".", "?.") and self.peek().kind == IDENT:
                safe = self.advance().text == "?."
                name = self.advance().text
                expression = MemberExpr(expression.span, target=expression, name=name, safe=safe)
            elif self.at("!!"):
                self.advance()
                expression = UnaryExpr(expression.span, operator="!!", operand=expression, postfix=True)
            elif self.at("[") and same_line:
                expression = IndexExpr(expression.span, target=expression, indices=self._parse_indices())
            elif self.at("++", "--") and same_line:
                operator = self.advance().text
                expression = UnaryExpr(expression.span, operator=operator, operand=expression, postfix=True)
            elif self.at("::"):
                self.advance()
                reference = self.advance().text
                expression = UnknownExpr(expression.span, description=f"::{reference}")
            else:
                return expression


    def _at_call_type_arguments(self) -> bool:
        """True when `<...>` is followed by a call, as in `listOf<Int>()`."""
        before = self.mark()
        try:
            self.skip_type_arguments()
            return self.at("(") and not self.token.newline_before
        except SyntaxMismatch:
            return False
        finally:
            self.reset(before)


    def _parse_indices(self) -> list[Expr]:
        self.expect("[")
        indices = []
        while not self.at("]"):
            indices.append(self.parse_expression())
            if not self.accept(","):
                break
        self.expect("]")
        return indices


    def parse_primary(self) -> Expr:
        start = self.span()
        literal = self.parse_literal()
        if literal is not None:
            return literal

        if self.at("this", "super"):
            is_super = self.advance().text == "super"
            if is_super:
                self.skip_type_arguments()
            self._skip_label()
            return ThisExpr(self.close_span(start), is_super=is_super)
        if self.at("if"):
            return self.parse_if()
        if self.at(*SKIPPED_EXPRESSIONS):
            return self._skip_construct()
        if self.at("return", "throw"):
            keyword = self.advance().text
            self._skip_label()
            if not (self.at("}", ";", ")", ",") or self.at_end() or self.token.newline_before):
                self.parse_expression()
            return UnknownExpr(self.close_span(start), description=keyword)
        if self.at("break", "continue"):
            keyword = self.advance().text
            self._skip_label()
            return UnknownExpr(self.close_span(start), description=keyword)
        if self.at("fun"):
            self.fail("Anonymous functions are not supported")
        if self.at_ident():
            return NameExpr(start, name=self.advance().text)
        if self.at("("):
            self.advance()
            expression = self.parse_expression()
            self.expect(")")
            return expression
        if self.at("{"):
            return self.parse_lambda()
        if self.at("::"):
            self.advance()
            reference = self.advance().text
            return UnknownExpr(self.close_span(start), description=f"::{reference}")
        if self.at("["):
            self.skip_balanced()
            return UnknownExpr(self.close_span(start), description="collection literal")
        self.fail("Expected an expression")


    def parse_if(self) -> ConditionalExpr:
        start = self.span()
        self.expect("if")
        self.expect("(")
        condition = self.parse_expression()
        self.expect(")")
        then_branch = self.parse_control_body()
        else_branch = None
        before = self.mark()
        self.accept(";")
        if self.accept("else"):
            else_branch = self.parse_control_body()
        else:
            self.reset(before)
        return ConditionalExpr(
            self.close_span(start), condition=condition,
            then_branch=then_branch or Block(start), else_branch=else_branch,
        )


    def parse_lambda(self) -> LambdaExpr:
        start = self.span()
        self.expect("{")
        parameters = self._try_lambda_parameters()
        body = []
        while not self.at("}") and not self.at_end():
            if self.accept(";"):
                continue
            statement = self._statement_or_skip()
            if statement is not None:
                body.append(statement)
        self.expect("}")
        return LambdaExpr(self.close_span(start), parameters=parameters, body=body)


    def _try_lambda_parameters(self) -> list[ParamNode]:
        before = self.mark()
        parameters = []
        try:
            if self.accept("->"):
                return []
            while True:
                start = self.span()
                if self.at("("):
                    self.fail("Destructuring lambda parameters are not supported")
                name = self.expect_ident().text
                parameter_type = self.parse_type() if self.accept(":") else None
                parameters.append(ParamNode(self.close_span(start), name=name, type=parameter_type))
                if self.accept(","):
                    continue
                self.expect("->")
                return parameters
        except SyntaxMismatch:
            self.reset(before)
            return []


    def parse_arguments(self) -> list[Expr]:
        self.expect("(")
        arguments = []
        while not self.at(")"):
            # Named argument
            if self.at_ident() and self.peek().text == "=":
                self.advance()
                self.advance()
            self.accept("*")
            arguments.append(self.parse_expression())
            if not self.accept(","):
                break
        self.expect(")")
        return arguments
