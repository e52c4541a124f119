from __future__ import annotations

from dataclasses import dataclass

from Controller.expression_analyzer import ExpressionAnalyzer, ExpressionValue
from Controller.logger import get_logger
from Model.data_types import BuiltinType
from Model.entity import Entity, EntityId, TypeRef, UseSite
from Model.entity_tree import EntityTree
from Model.object_types import EntityKind, TypeFlavor
from Model.parse_tree import FileNode, Node
from Model.relation import RelationKind, RelationStore

_TYPES = frozenset({EntityKind.TYPE})


@dataclass(frozen=True)
class InferenceConfig:
    """Bounds the number of inference rounds."""
    max_rounds: int = 5

    def __post_init__(self):
        if self.max_rounds < 1:
            raise ValueError(f"max_rounds must be at least 1, got {self.max_rounds}")


class RelationResolver:
    """
    Class that resolves the raw types of the entity tree, infers expression
    types over several rounds and records the dependency relations.

    The stages run in order: `resolve_type_refs`, `run_inference`,
    `resolve_extensions`, `collect_relations`. `resolve_all` runs them all.

    Attributes:
        - tree: The entity tree of the run.
        - asts: The parsed files, entity ids already attached.
        - config: The InferenceConfig.
        - store: The RelationStore being filled.
        - values: Per-expression inference state, keyed by AST node.
        - entity_types: Inferred types of entities without a declared type
          (locals, properties, expression-bodied functions).
        - diagnostics: Messages about receivers that could not be resolved.
        - rounds_used: Rounds run by the last `run_inference`.
    """
    def __init__(self, tree: EntityTree, asts: list[FileNode], config: InferenceConfig | None = None, logger=None):
        self.tree = tree
        self.asts = asts
        self.config = config or InferenceConfig()
        self.logger = get_logger(__name__, logger)
        self.store = RelationStore(tree)
        self.values: dict[Node, ExpressionValue] = {}
        self.entity_types: dict[EntityId, EntityId] = {}
        self.diagnostics: list[str] = []
        self.rounds_used = 0
        self._extensions: list[tuple[EntityId, EntityId]] | None = None


    def resolve_all(self) -> RelationStore:
        self.resolve_type_refs()
        self.run_inference()
        self.resolve_extensions()
        return self.collect_relations()


    # --- type references ---

    def resolve_type_refs(self) -> int:
        """
        Resolves the import directives of every file, then every raw TypeRef
        recorded on an entity, function-type components included.

        Returns:
            - The number of refs resolved.
        """
        resolved = 0
        for entity in self.tree.of_kind(EntityKind.FILE):
            for directive in entity.imports:
                if directive.wildcard:
                    continue
                directive.resolved = self.tree.resolve_qualified(directive.path)
                resolved += directive.resolved is not None

        for entity in list(self.tree):
            if entity.kind is EntityKind.FILE or self.tree.is_builtin(entity.id):
                continue
            scope = self._lookup_scope(entity)
            file_id = self.tree.file_of(entity.id)
            for ref in entity.type_refs():
                resolved += self._resolve_ref(ref, scope, file_id)
        self.logger.debug(f"Resolved {resolved} type references")
        return resolved


    def _lookup_scope(self, entity: Entity) -> EntityId:
        # A type's own supertypes and annotations are looked up from its parent
        if entity.kind is EntityKind.TYPE and entity.parent is not None:
            return entity.parent
        return entity.id


    def _resolve_ref(self, ref: TypeRef, scope: EntityId, file_id: EntityId | None) -> int:
        if ref.is_function:
            return sum(self._resolve_ref(component, scope, file_id) for component in ref.components())
        if ref.resolved is not None:
            return 0
        ref.resolved = self.tree.lookup(scope, ref.raw_name, _TYPES, file_id=file_id)
        return 1 if ref.resolved is not None else 0


    # --- inference ---

    def run_inference(self) -> int:
        """
        Repeats inference rounds until a round resolves nothing new or the
        round bound is reached.

        Returns:
            - The number of rounds run.
        """
        self._index_extensions()
        rounds = 0
        while rounds < self.config.max_rounds:
            rounds += 1
            progress = self.run_round()
            self.logger.debug(f"Inference round {rounds} resolved {progress} new types")
            if progress == 0:
                break
        self.rounds_used = rounds
        return rounds


    def run_round(self) -> int:
        """Runs one inference pass over every file; returns the number of newly inferred types."""
        if self._extensions is None:
            self._index_extensions()
        before = self._resolved_count()
        for ast in self.asts:
            ExpressionAnalyzer(self, ast, recording=False, logger=self.logger).analyze()
        return self._resolved_count() - before


    def _resolved_count(self) -> int:
        inferred = sum(1 for value in self.values.values() if value.inferred_type is not None)
        return inferred + len(self.entity_types)


    def infer_entity_type(self, entity_id: EntityId, type_id: EntityId) -> None:
        self.entity_types.setdefault(entity_id, type_id)


    def type_of(self, entity_id: EntityId | None) -> EntityId | None:
        """
        The value type of an entity: the declared type when resolved, else the
        inferred one. A constructor yields its class and a getter its property's type.
        """
        if entity_id is None:
            return None
        entity = self.tree.entity(entity_id)
        if entity.kind is EntityKind.FUNCTION:
            if entity.is_constructor:
                return entity.parent
            if entity.accessor_of is not None:
                # Setters return nothing
                return None if entity.name.startswith("set") else self.type_of(entity.accessor_of)
        ref = entity.raw_return_type
        if ref is not None and ref.resolved is not None:
            return ref.resolved
        return self.entity_types.get(entity_id)


    # --- extensions ---

    def _index_extensions(self) -> list[tuple[EntityId, EntityId]]:
        self._extensions = []
        for entity in self.tree.of_kind(EntityKind.FUNCTION):
            if not entity.is_extension:
                continue
            receiver = entity.receiver_type.resolved if entity.receiver_type is not None else None
            if receiver is None:
                raw = entity.receiver_type.raw_name if entity.receiver_type is not None else "?"
                message = f"Unresolved receiver type '{raw}' of extension function {entity.qualified_name}"
                if message not in self.diagnostics:
                    self.logger.warning(message)
                    self.diagnostics.append(message)
                continue
            self._extensions.append((entity.id, receiver))
        return self._extensions


    def extensions_on(self, type_id: EntityId, name: str) -> list[EntityId]:
        """Extension functions named `name` applicable to a value of `type_id`, in id order."""
        if self._extensions is None:
            self._index_extensions()
        closure = set(self.tree.type_closure(type_id))
        any_id = self.tree.builtin_names.get(BuiltinType.ANY.kotlin_name)
        return [
            function for function, receiver in self._extensions
            if self.tree.entity(function).name == name and (receiver in closure or receiver == any_id)
        ]


    def resolve_extensions(self) -> list[tuple[EntityId, EntityId]]:
        """
        Records an Extension relation for every extension function whose
        receiver type resolved.

        Returns:
            - (function, extended type) pairs in id order.
        """
        pairs = self._index_extensions()
        for function, receiver in pairs:
            site = self.tree.entity(function).receiver_type.use_site
            self.record(function, receiver, RelationKind.EXTENSION, site)
        return list(pairs)


    # --- relations ---

    def record(self, source: EntityId, target: EntityId | None, kind: RelationKind, at: UseSite) -> None:
        if target is None:
            return
        if self.tree.entity(source).is_synthetic:
            return
        if self.tree.is_builtin(target) and kind is not RelationKind.EXTENSION:
            return
        self.store.record_relation(source, target, kind, at)


    def collect_relations(self) -> RelationStore:
        """
        Records the declaration-level relations from the entity tree and the
        expression-level relations from a final analysis pass.

        Returns:
            - The RelationStore.
        """
        for entity in list(self.tree):
            if entity.is_synthetic:
                continue
            if entity.kind is EntityKind.FILE:
                self._collect_imports(entity)
            elif entity.kind is EntityKind.TYPE:
                self._collect_type(entity)
            elif entity.kind is EntityKind.FUNCTION:
                self._collect_signature(entity)
            elif entity.kind is EntityKind.PROPERTY:
                self._collect_annotations(entity)

        for ast in self.asts:
            ExpressionAnalyzer(self, ast, recording=True, logger=self.logger).analyze()

        self.logger.debug(f"Collected {len(self.store)} relations from {self.store.occurrences} occurrences")
        return self.store


    def _collect_imports(self, file_entity: Entity):
        for directive in file_entity.imports:
            if not directive.wildcard and directive.resolved is not None:
                target = self.tree.entity(directive.resolved)
                if target.kind is not EntityKind.PACKAGE:
                    self.record(file_entity.id, directive.resolved, RelationKind.IMPORT, directive.use_site)


    def _collect_annotations(self, entity: Entity):
        for ref in entity.annotations:
            self.record(entity.id, ref.resolved, RelationKind.ANNOTATION, ref.use_site)


    def _collect_type(self, entity: Entity):
        self._collect_annotations(entity)
        for ref in entity.raw_supertypes:
            if ref.resolved is None:
                continue
            target = self.tree.entity(ref.resolved)
            implements = target.type_flavor is TypeFlavor.INTERFACE and entity.type_flavor is not TypeFlavor.INTERFACE
            kind = RelationKind.IMPLEMENT if implements else RelationKind.EXTEND
            self.record(entity.id, ref.resolved, kind, ref.use_site)

        for child in self.tree.children(entity.id):
            member = self.tree.entity(child)
            if member.kind is not EntityKind.PROPERTY or member.is_enum_constant:
                continue
            contained = self.type_of(child)
            site = member.raw_return_type.use_site if member.raw_return_type is not None else self._site(member)
            self.record(entity.id, contained, RelationKind.CONTAIN, site)


    def _collect_signature(self, entity: Entity):
        self._collect_annotations(entity)
        for ref in entity.raw_parameter_types:
            for part in self._flatten(ref):
                self.record(entity.id, part.resolved, RelationKind.PARAMETER, part.use_site)

        if entity.is_constructor:
            return
        declared = entity.raw_return_type
        if declared is not None:
            for part in self._flatten(declared):
                self.record(entity.id, part.resolved, RelationKind.RETURN, part.use_site)
        else:
            self.record(entity.id, self.entity_types.get(entity.id), RelationKind.RETURN, self._site(entity))


    def _flatten(self, ref: TypeRef) -> list[TypeRef]:
        if not ref.is_function:
            return [ref]
        return [part for component in ref.components() for part in self._flatten(component)]


    @staticmethod
    def _site(entity: Entity) -> UseSite:
        location = entity.location
        return UseSite(location.path, location.start_line) if location is not None else UseSite("", 0)
