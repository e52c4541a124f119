from Language.java_builder import build_java_entities
from Language.java_parser import parse_java
from Model.entity_tree import EntityTree
from Model.object_types import EntityKind, SourceLanguage, TypeFlavor

LOGGER = """\
package com.example.util;

public class Logger implements Sink {
    private int count;
    public final String name;

    public Logger(String name) {
        this.name = name;
    }

    public void log(String message) {
        String line = message;
        count = count + 1;
    }
}
"""


def build(source: str, path: str = "com/example/util/Logger.java"):
    tree = EntityTree.with_builtins()
    build_java_entities(parse_java(source, path), tree)
    return tree


def test_fields_become_properties_without_accessors():
    tree = build(LOGGER)

    logger = tree.by_qualified_name["com.example.util.Logger"]
    children = [tree.entity(child) for child in tree.children(logger)]
    assert [child.name for child in children] == ["count", "name", "Logger", "log"]
    assert not any(child.is_synthetic for child in children)

    count, name = children[0], children[1]
    assert count.kind is EntityKind.PROPERTY and count.is_mutable
    assert not name.is_mutable
    assert count.raw_return_type.raw_name == "int"


def test_methods_parameters_and_locals():
    tree = build(LOGGER)

    constructor = tree.entity(tree.homonyms("com.example.util.Logger.Logger")[0])
    assert constructor.is_constructor

    log = tree.by_qualified_name["com.example.util.Logger.log"]
    children = [(tree.entity(child).name, tree.entity(child).kind) for child in tree.children(log)]
    assert children == [("message", EntityKind.PARAMETER), ("line", EntityKind.VARIABLE)]
    assert tree.entity(log).raw_return_type.raw_name == "void"
    assert [ref.raw_name for ref in tree.entity(log).raw_parameter_types] == ["String"]


def test_types_are_tagged_java():
    tree = build(LOGGER)

    logger = tree.entity(tree.by_qualified_name["com.example.util.Logger"])
    assert logger.language is SourceLanguage.JAVA
    assert logger.type_flavor is TypeFlavor.CLASS
    assert logger.delegates_to is None
    assert [ref.raw_name for ref in logger.raw_supertypes] == ["Sink"]


def test_interfaces_and_enums():
    tree = build("interface Shape { double area(); }\nenum Color { RED, GREEN }\n", path="Shapes.java")

    assert tree.entity(tree.by_qualified_name["Shape"]).type_flavor is TypeFlavor.INTERFACE
    red = tree.entity(tree.by_qualified_name["Color.RED"])
    assert red.is_enum_constant and red.raw_return_type.raw_name == "Color"
    assert tree.by_qualified_name["Shapes.java"] == tree.file_of(red.id)
