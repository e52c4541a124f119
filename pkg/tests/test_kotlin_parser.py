from pathlib import Path

import pytest

from Controller.custom_exception import ParseError
from Language.kotlin_parser import parse_kotlin
from Model.parse_tree import (
    AssignExpr, CallExpr, CastExpr, ClassNode, ExprStmt, FunctionNode, LambdaExpr, LocalVarNode,
    MemberExpr, NameExpr, PropertyNode, ReturnStmt, UnknownExpr,
)

CORPUS = Path(__file__).parent / "fixtures" / "corpus"


def parse(source: str):
    return parse_kotlin(source, "A.kt")


def test_listing_declarations():
    ast = parse_kotlin((CORPUS / "Listing1.kt").read_text(encoding="utf-8"), "Listing1.kt")

    bar, calculate, foo = ast.declarations
    assert isinstance(bar, ClassNode) and bar.name == "Bar"
    assert bar.constructor_parameters[0].property_keyword == "val"
    assert bar.constructor_parameters[0].type.name == "Int"

    parameter_type = calculate.parameters[0].type
    assert parameter_type.is_function
    assert parameter_type.receiver.name == "Bar"
    assert parameter_type.result.name == "Int"

    body = foo.members[0].body
    call = body.statements[0].expression
    assert isinstance(call, CallExpr)
    assert call.callee.name == "calculate"
    assert isinstance(call.lambda_argument, LambdaExpr)
    assert ast.diagnostics == []


def test_package_and_imports():
    ast = parse(
        "package com.example.app\n"
        "import com.example.model.Circle\n"
        "import com.example.util.*\n"
        "import com.example.model.Shape as Figure\n"
    )

    assert ast.package == "com.example.app"
    circle, util, figure = ast.imports
    assert circle.path == "com.example.model.Circle" and not circle.wildcard
    assert util.path == "com.example.util" and util.wildcard
    assert figure.alias == "Figure"


def test_class_flavors_and_supertypes():
    ast = parse(
        "interface Shape\n"
        "enum class Color { RED, GREEN }\n"
        "annotation class Marker\n"
        "object Registry\n"
        "class Circle(val radius: Double) : Base(\"circle\"), Shape\n"
        "class Delegated(printer: Printer) : Printer by printer\n"
    )

    flavors = [node.flavor for node in ast.declarations]
    assert flavors == ["interface", "enum", "annotation", "object", "class", "class"]

    color = ast.declarations[1]
    assert [member.name for member in color.members] == ["RED", "GREEN"]
    assert all(member.is_enum_constant for member in color.members)

    circle = ast.declarations[4]
    base, shape = circle.supertypes
    assert base.type.name == "Base" and len(base.arguments) == 1
    assert shape.arguments is None

    delegated = ast.declarations[5].supertypes[0]
    assert isinstance(delegated.delegate, NameExpr) and delegated.delegate.name == "printer"


def test_first_declaration_keeps_modifiers_without_a_package():
    marker, circle, color = parse("annotation class Marker\n@Marker\nclass Circle\nenum class Color { RED }\n").declarations

    assert marker.flavor == "annotation"
    assert [annotation.name for annotation in circle.annotations] == ["Marker"]
    assert color.flavor == "enum"
    assert parse("enum class Color { RED }\n").diagnostics == []


def test_file_annotations_precede_the_package():
    ast = parse("@file:JvmName(\"Tools\")\npackage com.example\n@Marker\nclass Circle\n")

    assert ast.package == "com.example"
    assert [annotation.name for annotation in ast.declarations[0].annotations] == ["Marker"]


def test_extension_function_and_expression_body():
    ast = parse("fun Int.twice(): Int = this * 2\n")

    function = ast.declarations[0]
    assert isinstance(function, FunctionNode)
    assert function.receiver.name == "Int"
    assert function.name == "twice"
    assert function.expression_body is not None and function.body is None


def test_property_initializer_and_delegate():
    ast = parse(
        "class Canvas {\n"
        "    var count: Int = 0\n"
        "    val printer by PrinterProvider()\n"
        "}\n"
    )

    count, printer = ast.declarations[0].members
    assert isinstance(count, PropertyNode) and count.mutable
    assert printer.delegate is not None and printer.initializer is None


def test_statements_are_split_on_newlines():
    ast = parse(
        "fun f(shape: Shape) {\n"
        "    val c = shape as Circle\n"
        "    c.area()\n"
        "    total += 1\n"
        "    return\n"
        "}\n"
    )

    local, call, assign, ret = ast.declarations[0].body.statements
    assert isinstance(local, LocalVarNode) and isinstance(local.initializer, CastExpr)
    assert isinstance(call, ExprStmt) and isinstance(call.expression.callee, MemberExpr)
    assert isinstance(assign.expression, AssignExpr) and assign.expression.operator == "+="
    assert isinstance(ret, ReturnStmt) and ret.expression is None


def test_when_is_skipped_with_a_diagnostic():
    ast = parse(
        "fun f(x: Int) {\n"
        "    val y = when (x) { 1 -> 2\n else -> 3 }\n"
        "    g(y)\n"
        "}\n"
    )

    local, call = ast.declarations[0].body.statements
    assert isinstance(local.initializer, UnknownExpr)
    assert local.initializer.description == "when"
    assert call.expression.callee.name == "g"
    assert any("'when'" in message for message in ast.diagnostics)


def test_unsupported_declaration_is_skipped():
    ast = parse(
        "typealias Names = List<String>\n"
        "class Kept\n"
    )

    assert [node.name for node in ast.declarations] == ["Kept"]
    assert len(ast.diagnostics) == 1


def test_unbalanced_source_raises():
    with pytest.raises(ParseError) as error:
        parse("class Broken {\n    fun f() {\n}\n")
    assert error.value.path == "A.kt"


def test_unterminated_string_raises():
    with pytest.raises(ParseError):
        parse('val s = "open\n')
