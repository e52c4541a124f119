import pytest

from Controller.custom_exception import DuplicateEntity
from Model.data_types import BuiltinType
from Model.entity import Entity, ImportRef, Location, TypeRef, UseSite
from Model.entity_tree import EntityTree
from Model.object_types import EntityKind, SourceLanguage

KOTLIN = SourceLanguage.KOTLIN


def add_file(tree, path, package_name):
    package_id = tree.package(package_name, KOTLIN)
    file_name = path.rsplit("/", 1)[-1]
    qualified = f"{package_name}.{file_name}" if package_name else file_name
    return tree.intern_entity(
        Entity(name=file_name, kind=EntityKind.FILE, language=KOTLIN, location=Location(path, 1, 20), package_id=package_id),
        qualified_name=qualified,
    ), package_id


def add(tree, name, kind, parent, path="A.kt", **fields):
    return tree.intern_entity(Entity(name=name, kind=kind, language=KOTLIN, parent=parent, location=Location(path, 1, 2), **fields))


def test_builtins_come_first_in_alphabetical_order():
    tree = EntityTree.with_builtins()

    assert len(tree) == len(BuiltinType)
    assert [entity.qualified_name for entity in tree][:3] == ["kotlin.Any", "kotlin.Boolean", "kotlin.Char"]
    assert tree.builtin_names["int"] == tree.builtin_names["Int"]
    assert tree.entity(tree.builtin_names["void"]).qualified_name == "kotlin.Unit"
    assert all(tree.is_builtin(entity_id) for entity_id in tree.builtin_names.values())


def test_children_are_qualified_under_their_parent():
    tree = EntityTree.with_builtins()
    _, package_id = add_file(tree, "A.kt", "com.example")
    type_id = add(tree, "Bar", EntityKind.TYPE, package_id)
    property_id = add(tree, "x", EntityKind.PROPERTY, type_id)

    assert tree.entity(type_id).qualified_name == "com.example.Bar"
    assert tree.entity(property_id).qualified_name == "com.example.Bar.x"
    assert tree.children(type_id) == [property_id]


def test_default_package_adds_no_prefix():
    tree = EntityTree.with_builtins()
    _, package_id = add_file(tree, "A.kt", "")
    type_id = add(tree, "Bar", EntityKind.TYPE, package_id)

    assert tree.entity(type_id).qualified_name == "Bar"


def test_duplicate_type_is_rejected():
    tree = EntityTree.with_builtins()
    _, package_id = add_file(tree, "A.kt", "p")
    add(tree, "Bar", EntityKind.TYPE, package_id)

    with pytest.raises(DuplicateEntity) as error:
        add(tree, "Bar", EntityKind.TYPE, package_id, path="B.kt")
    assert error.value.qualified_name == "p.Bar"


def test_function_overloads_share_a_name():
    tree = EntityTree.with_builtins()
    _, package_id = add_file(tree, "A.kt", "p")
    first = add(tree, "f", EntityKind.FUNCTION, package_id)
    second = add(tree, "f", EntityKind.FUNCTION, package_id)

    assert tree.homonyms("p.f") == [first, second]
    assert tree.by_qualified_name["p.f"] == first


def test_synthetic_accessors_are_not_indexed_by_name():
    tree = EntityTree.with_builtins()
    _, package_id = add_file(tree, "A.kt", "p")
    type_id = add(tree, "Bar", EntityKind.TYPE, package_id)
    property_id = add(tree, "x", EntityKind.PROPERTY, type_id)
    getter = tree.intern_entity(Entity(
        name="getX", kind=EntityKind.FUNCTION, language=KOTLIN, parent=type_id, is_synthetic=True, accessor_of=property_id,
    ))

    assert "p.Bar.getX" not in tree.by_qualified_name
    assert tree.find_member(type_id, "getX") == getter
    assert tree.file_of(getter) == tree.file_of(property_id)


def test_members_are_inherited_through_supertypes():
    tree = EntityTree.with_builtins()
    _, package_id = add_file(tree, "A.kt", "p")
    base = add(tree, "Base", EntityKind.TYPE, package_id)
    label = add(tree, "label", EntityKind.PROPERTY, base)
    child = add(tree, "Child", EntityKind.TYPE, package_id)
    tree.entity(child).raw_supertypes.append(TypeRef("Base", UseSite("A.kt", 3), resolved=base))

    assert tree.type_closure(child) == [child, base]
    assert tree.find_member(child, "label") == label


def test_type_closure_survives_cycles():
    tree = EntityTree.with_builtins()
    _, package_id = add_file(tree, "A.kt", "p")
    first = add(tree, "A", EntityKind.TYPE, package_id)
    second = add(tree, "B", EntityKind.TYPE, package_id)
    tree.entity(first).raw_supertypes.append(TypeRef("B", UseSite("A.kt", 1), resolved=second))
    tree.entity(second).raw_supertypes.append(TypeRef("A", UseSite("A.kt", 1), resolved=first))

    assert tree.type_closure(first) == [first, second]


def test_lookup_prefers_the_innermost_scope():
    tree = EntityTree.with_builtins()
    _, package_id = add_file(tree, "A.kt", "p")
    outer = add(tree, "x", EntityKind.PROPERTY, package_id)
    type_id = add(tree, "Bar", EntityKind.TYPE, package_id)
    inner = add(tree, "x", EntityKind.PROPERTY, type_id)
    function_id = add(tree, "f", EntityKind.FUNCTION, type_id)

    assert tree.lookup(function_id, "x") == inner
    assert tree.lookup(package_id, "x") == outer


def test_lookup_goes_through_imports_then_builtins():
    tree = EntityTree.with_builtins()
    _, model = add_file(tree, "model/Shape.kt", "model")
    shape = add(tree, "Shape", EntityKind.TYPE, model, path="model/Shape.kt")
    file_id, app = add_file(tree, "app/App.kt", "app")
    tree.entity(file_id).imports.append(ImportRef("model.Shape", UseSite("app/App.kt", 2)))
    function_id = add(tree, "draw", EntityKind.FUNCTION, app, path="app/App.kt")

    assert tree.lookup(function_id, "Shape") == shape
    assert tree.lookup(function_id, "Int") == tree.builtin_names["Int"]
    assert tree.lookup(function_id, "Missing") is None


def test_wildcard_imports_expose_package_members():
    tree = EntityTree.with_builtins()
    _, model = add_file(tree, "model/Shape.kt", "model")
    shape = add(tree, "Shape", EntityKind.TYPE, model, path="model/Shape.kt")
    file_id, app = add_file(tree, "app/App.kt", "app")
    tree.entity(file_id).imports.append(ImportRef("model", UseSite("app/App.kt", 2), wildcard=True))

    assert tree.lookup(app, "Shape", file_id=file_id) == shape


def test_dotted_names_descend_into_members():
    tree = EntityTree.with_builtins()
    _, package_id = add_file(tree, "A.kt", "p")
    outer = add(tree, "Outer", EntityKind.TYPE, package_id)
    inner = add(tree, "Inner", EntityKind.TYPE, outer)

    assert tree.lookup(package_id, "Outer.Inner") == inner
    assert tree.resolve_qualified("p.Outer.Inner") == inner


def test_constructors_are_not_members():
    tree = EntityTree.with_builtins()
    _, package_id = add_file(tree, "A.kt", "p")
    type_id = add(tree, "Bar", EntityKind.TYPE, package_id)
    add(tree, "Bar", EntityKind.FUNCTION, type_id, is_constructor=True)

    assert tree.find_member(type_id, "Bar") is None


def test_unknown_id_raises():
    tree = EntityTree.with_builtins()

    with pytest.raises(KeyError):
        tree.entity(999)
