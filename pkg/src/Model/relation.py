from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from Controller.custom_exception import TaxonomyViolation
from Model.entity import EntityId, UseSite
from Model.object_types import SourceLanguage


class RelationKind(Enum):
    """
    Enum class for the dependency relation taxonomy.

    The first eleven kinds apply to both languages; DELEGATE and EXTENSION
    only exist with a Kotlin source.
    """
    IMPORT = "Import"
    CONTAIN = "Contain"
    EXTEND = "Extend"
    IMPLEMENT = "Implement"
    CALL = "Call"
    CREATE = "Create"
    CAST = "Cast"
    ANNOTATION = "Annotation"
    USE = "Use"
    PARAMETER = "Parameter"
    RETURN = "Return"
    DELEGATE = "Delegate"
    EXTENSION = "Extension"

    @property
    def order(self) -> int:
        return _KIND_ORDER[self]

    def __str__(self):
        return self.value


_KIND_ORDER = {kind: index for index, kind in enumerate(RelationKind)}

KOTLIN_ONLY_KINDS = frozenset({RelationKind.DELEGATE, RelationKind.EXTENSION})


@dataclass(eq=False)
class DependencyRelation:
    """
    A typed, weighted edge between two entities. The weight is the number of
    occurrences and always equals the number of recorded locations.
    """
    source: EntityId
    target: EntityId
    kind: RelationKind
    locations: list[UseSite] = field(default_factory=list)

    @property
    def weight(self) -> int:
        return len(self.locations)

    @property
    def key(self) -> tuple[EntityId, EntityId, int]:
        return (self.source, self.target, self.kind.order)

    def __repr__(self):
        return f"{self.kind}({self.source} -> {self.target}, weight={self.weight})"


class RelationStore:
    """
    Class that aggregates relation occurrences per (source, target, kind).

    Attributes:
        - tree: The entity tree the endpoint ids belong to.
        - occurrences: Number of raw occurrences fed to record_relation.

    Methods:
        - record_relation: Records one occurrence of a relation.
        - relations: All relations ordered by (source, target, kind).
        - language_pair: The (source language, target language) of a relation.
    """
    def __init__(self, tree):
        self.tree = tree
        self.occurrences = 0
        self._relations: dict[tuple[EntityId, EntityId, RelationKind], DependencyRelation] = {}


    def record_relation(self, source: EntityId, target: EntityId, kind: RelationKind, at: UseSite) -> DependencyRelation:
        """
        Records one occurrence of a relation.

        Args:
            - source: The depending entity.
            - target: The entity depended upon.
            - kind: The relation kind.
            - at: The position of the occurrence.

        Returns:
            - The aggregated relation.
        """
        source_entity = self.tree.entity(source)
        self.tree.entity(target)

        # Delegation and extension are Kotlin-only relations
        if kind in KOTLIN_ONLY_KINDS and source_entity.language is SourceLanguage.JAVA:
            raise TaxonomyViolation(kind, source_entity)

        relation = self._relations.get((source, target, kind))
        if relation is None:
            relation = DependencyRelation(source, target, kind)
            self._relations[(source, target, kind)] = relation
        relation.locations.append(at)
        self.occurrences += 1
        return relation


    def get(self, source: EntityId, target: EntityId, kind: RelationKind) -> DependencyRelation | None:
        return self._relations.get((source, target, kind))


    def relations(self) -> list[DependencyRelation]:
        return sorted(self._relations.values(), key=lambda relation: relation.key)


    def of_kind(self, kind: RelationKind) -> list[DependencyRelation]:
        return [relation for relation in self.relations() if relation.kind is kind]


    def language_pair(self, relation: DependencyRelation) -> tuple[SourceLanguage, SourceLanguage]:
        """
        Derives the language pair from the two endpoints. A built-in endpoint
        takes the language of the other endpoint.
        """
        source_language = self.tree.entity(relation.source).language
        target_language = self.tree.entity(relation.target).language
        if target_language is SourceLanguage.BUILTIN:
            target_language = source_language
        if source_language is SourceLanguage.BUILTIN:
            source_language = target_language
        return source_language, target_language


    def total_weight(self) -> int:
        return sum(relation.weight for relation in self._relations.values())


    def __len__(self):
        return len(self._relations)

    def __iter__(self):
        return iter(self.relations())

    def __repr__(self):
        return f"RelationStore({len(self)} relations, {self.occurrences} occurrences)"
