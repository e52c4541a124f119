from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from Controller.custom_exception import RegistryConflict, UnknownLanguage
from Language.java_builder import build_java_entities
from Language.java_parser import parse_java
from Language.kotlin_builder import build_kotlin_entities
from Language.kotlin_parser import parse_kotlin
from Model.object_types import SourceLanguage
from Model.parse_tree import FileNode


@dataclass(frozen=True)
class ProcessorDescriptor:
    """
    Self-description of a language frontend.

    Attributes:
        - language_name: "kotlin" or "java".
        - extensions: File suffixes the processor claims, with the dot.
        - parse_entry: (source, path, logger) -> file AST.
        - build_entry: (ast, tree, logger) -> created entity ids.
        - language: The language tag of the entities it builds.
    """
    language_name: str
    extensions: tuple[str, ...]
    parse_entry: Callable[..., FileNode]
    build_entry: Callable[..., list[int]]
    language: SourceLanguage


# Languages implied by a requested language: Kotlin projects are mixed with Java
_REQUEST_IMPLIES = {
    "kotlin": ("kotlin", "java"),
    "java": ("java",),
}


class LanguageRegistry:
    """
    Class that holds the registered language processors, indexed by name and
    by file extension. The registry can be frozen once startup is over.

    Methods:
        - register: Adds a processor; its extensions must be unclaimed.
        - get / for_extension: Lookups by language name and by suffix.
        - processors_for_request: The processors a CLI language argument selects.
    """
    def __init__(self):
        self._by_name: dict[str, ProcessorDescriptor] = {}
        self._by_extension: dict[str, ProcessorDescriptor] = {}
        self.frozen = False


    def register(self, descriptor: ProcessorDescriptor) -> None:
        if self.frozen:
            raise RuntimeError("The language registry is frozen")
        for extension in descriptor.extensions:
            owner = self._by_extension.get(extension)
            if owner is not None:
                raise RegistryConflict(extension, owner.language_name, descriptor.language_name)
        self._by_name[descriptor.language_name] = descriptor
        for extension in descriptor.extensions:
            self._by_extension[extension] = descriptor


    def get(self, language_name: str) -> ProcessorDescriptor | None:
        return self._by_name.get(language_name)


    def for_extension(self, extension: str) -> ProcessorDescriptor | None:
        return self._by_extension.get(extension)


    def for_path(self, path: str) -> ProcessorDescriptor | None:
        for extension, descriptor in self._by_extension.items():
            if path.endswith(extension):
                return descriptor
        return None


    def processors_for_request(self, requested: str) -> list[ProcessorDescriptor]:
        """
        Selects the processors for a requested language.

        Args:
            - requested: The language named on the command line.

        Returns:
            - The processors, the requested language first.

        Raises:
            - UnknownLanguage: When the language is not registered.
        """
        requested = requested.lower()
        if requested not in self._by_name:
            raise UnknownLanguage(requested, self.names())
        names = _REQUEST_IMPLIES.get(requested, (requested,))
        return [self._by_name[name] for name in names if name in self._by_name]


    def names(self) -> list[str]:
        return sorted(self._by_name)


    def freeze(self) -> LanguageRegistry:
        self.frozen = True
        return self


    def __len__(self):
        return len(self._by_name)


KOTLIN_PROCESSOR = ProcessorDescriptor("kotlin", (".kt",), parse_kotlin, build_kotlin_entities, SourceLanguage.KOTLIN)
JAVA_PROCESSOR = ProcessorDescriptor("java", (".java",), parse_java, build_java_entities, SourceLanguage.JAVA)


def default_registry() -> LanguageRegistry:
    """The frozen registry with the Kotlin and Java processors."""
    registry = LanguageRegistry()
    registry.register(KOTLIN_PROCESSOR)
    registry.register(JAVA_PROCESSOR)
    return registry.freeze()
