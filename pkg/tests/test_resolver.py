import pytest

from Controller.resolver import InferenceConfig
from Model.object_types import EntityKind, SourceLanguage
from Model.relation import RelationKind

KOTLIN = SourceLanguage.KOTLIN
JAVA = SourceLanguage.JAVA

CHAIN = """\
package chain

class Node {
    fun next(): Node = this
}

fun start() = build().next()

fun build() = Node()
"""


# --- the fixture corpus ---

def test_receiver_scope_wins_over_the_enclosing_class(corpus):
    use = corpus.relation("Foo.calculateInFoo", "Bar.x", RelationKind.USE)

    assert use is not None
    assert [site.line for site in use.locations] == [7]
    assert corpus.relation("Foo.calculateInFoo", "Foo.x", RelationKind.USE) is None
    assert corpus.relation("calculate", "Bar", RelationKind.PARAMETER) is not None


def test_java_getter_call_reaches_the_kotlin_accessor(corpus):
    call = corpus.relation("FooJava.func", "BarKotlin.getX", RelationKind.CALL)

    assert call is not None
    assert corpus.store.language_pair(call) == (JAVA, KOTLIN)
    getter = corpus.tree.entity(call.target)
    assert getter.is_synthetic
    assert getter.accessor_of == corpus.id("BarKotlin.x")


def test_occurrences_are_counted(corpus):
    call = corpus.relation("com.example.app.Canvas.draw", "com.example.util.Logger.log", RelationKind.CALL)

    assert call.weight == 3
    assert [site.line for site in call.locations] == [23, 24, 25]
    assert {site.path for site in call.locations} == {call.locations[0].path}
    assert call.locations[0].path.endswith("com/example/app/App.kt")
    assert corpus.relation("com.example.app.Canvas.draw", "com.example.app.Canvas.logger", RelationKind.USE).weight == 3


def test_supertypes_split_into_extend_and_implement(corpus):
    circle = "com.example.model.Circle"

    assert corpus.targets(circle, RelationKind.EXTEND) == {"com.example.model.Base"}
    assert corpus.targets(circle, RelationKind.IMPLEMENT) == {"com.example.model.Shape"}
    assert corpus.targets(circle, RelationKind.ANNOTATION) == {"com.example.model.Marker"}


def test_class_and_property_delegation(corpus):
    assert corpus.targets("com.example.app.Delegated", RelationKind.DELEGATE) == {"com.example.app.ConsolePrinter"}
    assert corpus.targets("com.example.app.Canvas", RelationKind.DELEGATE) == {"com.example.app.PrinterProvider"}
    assert corpus.targets("com.example.app.Canvas", RelationKind.CREATE) == {"com.example.app.PrinterProvider"}


def test_extensions_on_builtin_and_declared_types(corpus):
    twice = corpus.relation("com.example.ext.twice", "kotlin.Int", RelationKind.EXTENSION)

    assert twice is not None
    assert corpus.store.language_pair(twice) == (KOTLIN, KOTLIN)
    assert corpus.targets("com.example.ext.describe", RelationKind.EXTENSION) == {"com.example.model.Circle"}
    assert corpus.targets("com.example.ext.useExtensions", RelationKind.CALL) == {
        "com.example.ext.describe", "com.example.ext.twice",
    }


def test_imports_record_the_imported_entity(corpus):
    assert corpus.targets("com.example.app.App.kt", RelationKind.IMPORT) == {
        "com.example.model.Circle", "com.example.model.Shape", "com.example.util.Logger",
    }
    assert corpus.targets("com.example.util.Registry.java", RelationKind.IMPORT) == {
        "com.example.model.Circle", "com.example.model.Shape",
    }


def test_java_code_creates_and_casts_kotlin_types(corpus):
    make = "com.example.util.Registry.make"

    assert corpus.targets(make, RelationKind.CREATE) == {"com.example.model.Circle"}
    assert corpus.targets(make, RelationKind.CAST) == {"com.example.model.Circle"}
    assert corpus.targets(make, RelationKind.RETURN) == {"com.example.model.Shape"}


def test_corpus_relations_respect_the_taxonomy(corpus):
    tree = corpus.tree
    for relation in corpus.store:
        source = tree.entity(relation.source)
        assert relation.weight == len(relation.locations) >= 1
        assert not source.is_synthetic
        if relation.kind in (RelationKind.DELEGATE, RelationKind.EXTENSION):
            assert source.language is KOTLIN
        if tree.is_builtin(relation.target):
            assert relation.kind is RelationKind.EXTENSION
        if relation.kind is RelationKind.IMPORT:
            assert source.kind is EntityKind.FILE


def test_every_extension_function_has_one_extension_relation(corpus):
    extensions = {entity.id for entity in corpus.tree.of_kind(EntityKind.FUNCTION) if entity.is_extension}
    sources = [relation.source for relation in corpus.store.of_kind(RelationKind.EXTENSION)]

    assert sorted(sources) == sorted(extensions)


def test_corpus_parses_without_skips(corpus):
    assert len(corpus.result.asts) == 9
    assert corpus.result.diagnostics == []


# --- multi-round inference ---

def test_chained_calls_need_a_second_round(extract):
    result = extract({"Chain.kt": CHAIN})

    assert result.result.rounds == 3
    assert result.relation("chain.start", "chain.Node.next", RelationKind.CALL) is not None
    assert result.relation("chain.start", "chain.Node", RelationKind.RETURN) is not None
    assert result.relation("chain.build", "chain.Node", RelationKind.RETURN) is not None


def test_round_bound_stops_inference_early(extract):
    result = extract({"Chain.kt": CHAIN}, max_rounds=1)

    assert result.result.rounds == 1
    assert result.relation("chain.build", "chain.Node", RelationKind.RETURN) is not None
    assert result.relation("chain.start", "chain.Node", RelationKind.RETURN) is None
    assert result.relation("chain.start", "chain.build", RelationKind.CALL) is not None
    assert result.relation("chain.start", "chain.Node.next", RelationKind.CALL) is None


def test_inference_config_rejects_zero_rounds():
    with pytest.raises(ValueError):
        InferenceConfig(0)


# --- resolution details ---

def test_kotlin_property_syntax_calls_java_getters(extract):
    result = extract({
        "Person.java": "public class Person {\n    private String name;\n    public String getName() { return name; }\n}\n",
        "Show.kt": "fun show(person: Person) = person.name\n",
    })

    call = result.relation("show", "Person.getName", RelationKind.CALL)
    assert call is not None
    assert result.store.language_pair(call) == (KOTLIN, JAVA)
    assert result.relation("show", "Person.name", RelationKind.USE) is None


def test_java_setter_calls_reach_the_kotlin_setter(extract):
    result = extract({
        "Counter.kt": "class Counter {\n    var count: Int = 0\n}\n",
        "Use.java": "class Use {\n    void bump(Counter counter) {\n        counter.setCount(3);\n    }\n}\n",
    })

    call = result.relation("Use.bump", "Counter.setCount", RelationKind.CALL)
    assert call is not None
    assert result.tree.entity(call.target).accessor_of == result.id("Counter.count")


def test_overloads_are_chosen_by_arity(extract):
    result = extract({
        "Math.kt": "fun add(a: Int) = a\nfun add(a: Int, b: Int) = a + b\nfun use() {\n    add(1, 2)\n}\n",
    })

    first, second = result.tree.homonyms("add")
    use = result.id("use")
    assert result.store.get(use, second, RelationKind.CALL) is not None
    assert result.store.get(use, first, RelationKind.CALL) is None


def test_interface_inheritance_is_an_extend(extract):
    result = extract({"Shapes.kt": "interface Shape\ninterface Polygon : Shape\nclass Square : Polygon\n"})

    assert result.targets("Polygon", RelationKind.EXTEND) == {"Shape"}
    assert result.targets("Square", RelationKind.IMPLEMENT) == {"Polygon"}


def test_inferred_property_types_are_contained(extract):
    result = extract({"Box.kt": "class Item\nclass Box {\n    val item = Item()\n    val size: Int = 1\n}\n"})

    assert result.targets("Box", RelationKind.CONTAIN) == {"Item"}
    assert result.targets("Box", RelationKind.CREATE) == {"Item"}


def test_unresolved_extension_receiver_is_reported(extract):
    result = extract({"Ext.kt": "fun Missing.go() {}\n"})

    assert any("Missing" in message for message in result.result.diagnostics)
    assert result.store.of_kind(RelationKind.EXTENSION) == []


def test_function_type_parameters_are_flattened(extract):
    result = extract({"Hof.kt": "class Bar\nclass Baz\nfun apply(block: Bar.(Baz) -> Unit) {}\n"})

    assert result.targets("apply", RelationKind.PARAMETER) == {"Bar", "Baz"}
