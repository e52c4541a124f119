import pytest

from Controller.custom_exception import ParseError
from Language.java_parser import parse_java
from Model.parse_tree import (
    AssignExpr, CallExpr, CastExpr, ExprStmt, FunctionNode, LocalVarNode, MemberExpr, NameExpr, NewExpr,
    PropertyNode, ReturnStmt,
)


def parse(source: str):
    return parse_java(source, "A.java")


def test_package_imports_and_supertypes():
    ast = parse(
        "package com.example.util;\n"
        "import com.example.model.Circle;\n"
        "import static com.example.Helpers.*;\n"
        "public class Registry extends Base implements Shape, Named {}\n"
    )

    assert ast.package == "com.example.util"
    circle, helpers = ast.imports
    assert circle.path == "com.example.model.Circle"
    assert helpers.is_static and helpers.wildcard

    registry = ast.declarations[0]
    assert [(supertype.type.name, supertype.keyword) for supertype in registry.supertypes] == [
        ("Base", "extends"), ("Shape", "implements"), ("Named", "implements"),
    ]


def test_fields_methods_and_constructors():
    ast = parse(
        "class Logger {\n"
        "    private int count, total = 0;\n"
        "    final String name;\n"
        "    Logger(String name) { this.name = name; }\n"
        "    public void log(String message) { count = count + 1; }\n"
        "    abstract int size();\n"
        "}\n"
    )

    count, total, name, constructor, log, size = ast.declarations[0].members
    assert isinstance(count, PropertyNode) and count.mutable and count.type.name == "int"
    assert total.initializer is not None
    assert not name.mutable
    assert isinstance(constructor, FunctionNode) and constructor.is_constructor
    assert log.return_type.name == "void" and log.parameters[0].type.name == "String"
    assert size.body is None


def test_enum_constants():
    ast = parse("enum Color { RED, GREEN(2); int code; }\n")

    red, green, code = ast.declarations[0].members
    assert red.is_enum_constant and green.is_enum_constant
    assert len(green.arguments) == 1
    assert not code.is_enum_constant


def test_cast_is_told_apart_from_parentheses():
    ast = parse(
        "class Registry {\n"
        "    Shape make() {\n"
        "        Shape s = new Circle(2.0);\n"
        "        Circle c = (Circle) s;\n"
        "        int n = (count) + 1;\n"
        "        return c;\n"
        "    }\n"
        "}\n"
    )

    shape, circle, number, ret = ast.declarations[0].members[0].body.statements
    assert isinstance(shape, LocalVarNode) and isinstance(shape.initializer, NewExpr)
    assert shape.initializer.type.name == "Circle"
    assert isinstance(circle.initializer, CastExpr) and circle.initializer.type.name == "Circle"
    assert not isinstance(number.initializer, CastExpr)
    assert isinstance(ret, ReturnStmt) and isinstance(ret.expression, NameExpr)


def test_member_calls_and_arrays():
    ast = parse(
        "class FooJava {\n"
        "    static void func(BarKotlin bar) {\n"
        "        System.out.println(bar.getX());\n"
        "        int[] values = new int[3];\n"
        "        values[0] = 1;\n"
        "    }\n"
        "}\n"
    )

    println, values, assign = ast.declarations[0].members[0].body.statements
    call = println.expression
    assert isinstance(call, CallExpr) and isinstance(call.callee, MemberExpr)
    assert call.callee.name == "println"
    inner = call.arguments[0]
    assert inner.callee.name == "getX" and inner.callee.target.name == "bar"
    assert values.initializer.is_array
    assert isinstance(assign, ExprStmt) and isinstance(assign.expression, AssignExpr)


def test_loops_are_skipped_with_a_diagnostic():
    ast = parse(
        "class Loop {\n"
        "    void run() {\n"
        "        for (int i = 0; i < 3; i++) { step(i); }\n"
        "        done();\n"
        "    }\n"
        "}\n"
    )

    statements = ast.declarations[0].members[0].body.statements
    assert len(statements) == 1
    assert statements[0].expression.callee.name == "done"
    assert any("'for'" in message for message in ast.diagnostics)


def test_nested_types_are_skipped():
    ast = parse(
        "class Outer {\n"
        "    static class Inner { }\n"
        "    int kept;\n"
        "}\n"
    )

    assert [member.name for member in ast.declarations[0].members] == ["kept"]
    assert len(ast.diagnostics) == 1


def test_unclosed_block_comment_raises():
    with pytest.raises(ParseError) as error:
        parse("class A { /* never closed }\n")
    assert error.value.line == 1
