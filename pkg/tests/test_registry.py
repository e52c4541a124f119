import pytest

from Controller.custom_exception import RegistryConflict, UnknownLanguage
from Language.registry import JAVA_PROCESSOR, KOTLIN_PROCESSOR, LanguageRegistry, ProcessorDescriptor, default_registry
from Model.object_types import SourceLanguage


def test_default_registry_knows_both_languages():
    registry = default_registry()

    assert registry.names() == ["java", "kotlin"]
    assert registry.frozen
    assert registry.for_path("src/App.kt") is KOTLIN_PROCESSOR
    assert registry.for_path("src/Logger.java") is JAVA_PROCESSOR
    assert registry.for_path("build.gradle") is None


def test_kotlin_request_includes_java():
    registry = default_registry()

    assert registry.processors_for_request("kotlin") == [KOTLIN_PROCESSOR, JAVA_PROCESSOR]
    assert registry.processors_for_request("Java") == [JAVA_PROCESSOR]


def test_unknown_language_lists_the_available_ones():
    with pytest.raises(UnknownLanguage) as error:
        default_registry().processors_for_request("scala")
    assert error.value.available == ["java", "kotlin"]


def test_empty_registry_finds_nothing():
    registry = LanguageRegistry()

    assert registry.get("kotlin") is None
    assert registry.for_extension(".kt") is None
    assert len(registry) == 0


def test_registered_processors_are_found_by_name_and_suffix():
    registry = LanguageRegistry()
    registry.register(KOTLIN_PROCESSOR)
    registry.register(JAVA_PROCESSOR)

    assert registry.get("kotlin") is KOTLIN_PROCESSOR
    assert registry.get("java") is JAVA_PROCESSOR
    assert registry.for_extension(".java") is JAVA_PROCESSOR
    assert not registry.frozen


def test_extensions_cannot_be_claimed_twice():
    registry = LanguageRegistry()
    registry.register(KOTLIN_PROCESSOR)
    script = ProcessorDescriptor("kotlin-script", (".kts", ".kt"), KOTLIN_PROCESSOR.parse_entry,
                                 KOTLIN_PROCESSOR.build_entry, SourceLanguage.KOTLIN)

    with pytest.raises(RegistryConflict):
        registry.register(script)
    assert registry.for_extension(".kts") is None
    assert len(registry) == 1


def test_frozen_registry_rejects_registration():
    with pytest.raises(RuntimeError):
        default_registry().register(KOTLIN_PROCESSOR)
