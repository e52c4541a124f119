from __future__ import annotations

from collections.abc import Iterable, Iterator

from Controller.custom_exception import DuplicateEntity
from Model.data_types import BuiltinType
from Model.entity import Entity, EntityId
from Model.object_types import EntityKind, SourceLanguage

# Kinds whose qualified names must be unique. Functions (overloads),
# parameters and local variables (sibling lambdas and blocks) may repeat.
UNIQUE_KINDS = frozenset({EntityKind.FILE, EntityKind.PACKAGE, EntityKind.TYPE, EntityKind.PROPERTY})


class EntityTree:
    """
    The id-indexed, scope-indexed forest of every entity of an extraction run.

    Attributes:
        - entities: Entities indexed by id.
        - by_qualified_name: Qualified name -> first entity declared under it.
        - children_index: Parent id -> child ids in declaration order.
        - builtins: Ids of the built-in types.
        - builtin_names: Every Kotlin or Java spelling of a built-in -> its id.
        - by_path: Source path -> File entity id.

    Methods:
        - intern_entity: Assigns the next dense id to an entity and indexes it.
        - lookup: Resolves a simple or dotted name from a scope.
        - find_member: Finds a named member of a scope, including inherited members.
    """
    def __init__(self):
        self.entities: list[Entity] = []
        self.by_qualified_name: dict[str, EntityId] = {}
        self.children_index: dict[EntityId, list[EntityId]] = {}
        self.builtins: set[EntityId] = set()
        self.builtin_names: dict[str, EntityId] = {}
        self.by_path: dict[str, EntityId] = {}
        self._homonyms: dict[str, list[EntityId]] = {}


    @classmethod
    def with_builtins(cls) -> EntityTree:
        """Creates a tree whose first ids are the built-in types, in alphabetical order."""
        tree = cls()
        for builtin in BuiltinType:
            builtin_id = tree.intern_entity(
                Entity(name=builtin.kotlin_name, kind=EntityKind.TYPE, language=SourceLanguage.BUILTIN, is_synthetic=True),
                qualified_name=builtin.qualified_name,
            )
            tree.builtins.add(builtin_id)
            for alias in builtin.aliases:
                tree.builtin_names[alias] = builtin_id
        return tree


    def intern_entity(self, proto: Entity, qualified_name: str | None = None) -> EntityId:
        """
        Interns an entity that has no id yet.

        Args:
            - proto: The entity; its parent, if any, must already be interned.
            - qualified_name: Explicit qualified name for root entities (files, packages).

        Returns:
            - The fresh id.
        """
        if proto.parent is not None:
            self.entity(proto.parent)

        if qualified_name is None:
            qualified_name = self._qualify(proto)

        # The duplicate check only covers declared, uniquely named entities
        if not proto.is_synthetic and proto.kind in UNIQUE_KINDS:
            existing = self.by_qualified_name.get(qualified_name)
            if existing is not None:
                raise DuplicateEntity(qualified_name, self.entities[existing].location, proto.location)

        proto.id = len(self.entities)
        proto.qualified_name = qualified_name
        self.entities.append(proto)
        self.children_index[proto.id] = []
        if proto.parent is not None:
            self.children_index[proto.parent].append(proto.id)

        # Synthetic accessors are only reachable through their owner's children
        if not proto.is_synthetic or proto.language is SourceLanguage.BUILTIN:
            self.by_qualified_name.setdefault(qualified_name, proto.id)
            self._homonyms.setdefault(qualified_name, []).append(proto.id)

        if proto.kind is EntityKind.FILE and proto.location is not None:
            self.by_path[proto.location.path] = proto.id

        return proto.id


    def package(self, name: str, language: SourceLanguage) -> EntityId:
        """Returns the package entity for a dotted name, interning it on first use."""
        existing = self.by_qualified_name.get(name)
        if existing is not None and self.entities[existing].kind is EntityKind.PACKAGE:
            return existing
        return self.intern_entity(Entity(name=name, kind=EntityKind.PACKAGE, language=language), qualified_name=name)


    def _qualify(self, proto: Entity) -> str:
        if proto.parent is None:
            return proto.name
        parent_name = self.entities[proto.parent].qualified_name
        # The default package has an empty qualified name
        return f"{parent_name}.{proto.name}" if parent_name else proto.name


    def entity(self, entity_id: EntityId) -> Entity:
        if not 0 <= entity_id < len(self.entities):
            raise KeyError(f"Unknown entity id {entity_id}")
        return self.entities[entity_id]


    def children(self, entity_id: EntityId) -> list[EntityId]:
        return self.children_index.get(entity_id, [])


    def homonyms(self, qualified_name: str) -> list[EntityId]:
        """Every non-synthetic entity declared under a qualified name, in id order."""
        return list(self._homonyms.get(qualified_name, []))


    def of_kind(self, *kinds: EntityKind) -> Iterator[Entity]:
        return (entity for entity in self.entities if entity.kind in kinds)


    def is_builtin(self, entity_id: EntityId) -> bool:
        return entity_id in self.builtins


    def file_of(self, entity_id: EntityId) -> EntityId | None:
        """The File entity that declares an entity, or None for packages and built-ins."""
        entity = self.entities[entity_id]
        if entity.kind is EntityKind.FILE:
            return entity_id
        if entity.location is None:
            # Synthetic accessors live in the file of their property
            if entity.accessor_of is not None:
                return self.file_of(entity.accessor_of)
            return self.file_of(entity.parent) if entity.parent is not None else None
        return self.by_path.get(entity.location.path)


    def supertypes(self, type_id: EntityId) -> list[EntityId]:
        entity = self.entities[type_id]
        return [ref.resolved for ref in entity.raw_supertypes if ref.resolved is not None]


    def type_closure(self, type_id: EntityId) -> list[EntityId]:
        """The type followed by all of its resolved supertypes, breadth first, cycle-safe."""
        closure = [type_id]
        index = 0
        while index < len(closure):
            for supertype in self.supertypes(closure[index]):
                if supertype not in closure:
                    closure.append(supertype)
            index += 1
        return closure


    def find_members(self, scope: EntityId, name: str, kinds: Iterable[EntityKind] | None = None) -> list[EntityId]:
        """
        Finds the members of a scope named `name`. On a Type scope the search
        continues into the supertypes until some level declares the name.

        Args:
            - scope: The entity whose children are searched.
            - name: The simple name.
            - kinds: Optional set of accepted entity kinds.

        Returns:
            - The matching ids of the first level that has any, in declaration order.
        """
        kinds = frozenset(kinds) if kinds is not None else None
        scopes = self.type_closure(scope) if self.entities[scope].kind is EntityKind.TYPE else [scope]
        for current in scopes:
            matches = [
                child for child in self.children_index.get(current, [])
                if self._matches(self.entities[child], name, kinds)
            ]
            if matches:
                return matches
        return []


    def find_member(self, scope: EntityId, name: str, kinds: Iterable[EntityKind] | None = None) -> EntityId | None:
        matches = self.find_members(scope, name, kinds)
        return matches[0] if matches else None


    @staticmethod
    def _matches(entity: Entity, name: str, kinds) -> bool:
        if entity.name != name or entity.is_constructor:
            return False
        return kinds is None or entity.kind in kinds


    def lookup(self, scope: EntityId, name: str, kinds: Iterable[EntityKind] | None = None,
               file_id: EntityId | None = None) -> EntityId | None:
        """
        Resolves a name from a scope: the scope's members, then the members of
        each enclosing scope up to the package, then the imports of the
        enclosing file, then the built-ins.

        Args:
            - scope: The innermost scope.
            - name: A simple or dotted name.
            - kinds: Optional set of accepted entity kinds.
            - file_id: The enclosing file, derived from the scope when omitted.

        Returns:
            - The first matching id, or None.
        """
        self.entity(scope)
        kinds = frozenset(kinds) if kinds is not None else None
        if file_id is None:
            file_id = self.file_of(scope)

        if "." in name:
            return self._lookup_dotted(scope, name, kinds, file_id)

        current = scope
        while current is not None:
            found = self.find_member(current, name, kinds)
            if found is not None:
                return found
            entity = self.entities[current]
            # Files are roots; their declarations live in their package
            current = entity.package_id if entity.kind is EntityKind.FILE else entity.parent

        found = self.lookup_imported(file_id, name, kinds)
        if found is not None:
            return found

        if kinds is None or EntityKind.TYPE in kinds:
            return self.builtin_names.get(name)
        return None


    def _lookup_dotted(self, scope, name, kinds, file_id) -> EntityId | None:
        head, *rest = name.split(".")
        found = self.lookup(scope, head, file_id=file_id)
        for segment in rest:
            if found is None:
                break
            found = self.find_member(found, segment)
        if found is not None and (kinds is None or self.entities[found].kind in kinds):
            return found
        found = self.resolve_qualified(name)
        if found is not None and (kinds is None or self.entities[found].kind in kinds):
            return found
        builtin = self.builtin_names.get(name)
        if builtin is not None and (kinds is None or EntityKind.TYPE in kinds):
            return builtin
        return None


    def lookup_imported(self, file_id: EntityId | None, name: str, kinds=None) -> EntityId | None:
        """Resolves a simple name through the import directives of a file."""
        if file_id is None:
            return None
        imports = self.entities[file_id].imports

        # Single-name imports shadow wildcard imports
        for directive in imports:
            if directive.wildcard or directive.visible_name != name:
                continue
            target = directive.resolved if directive.resolved is not None else self.resolve_qualified(directive.path)
            if target is not None and (kinds is None or self.entities[target].kind in kinds):
                return target

        for directive in imports:
            if not directive.wildcard:
                continue
            container = self.resolve_qualified(directive.path)
            if container is not None:
                found = self.find_member(container, name, kinds)
                if found is not None:
                    return found
        return None


    def resolve_qualified(self, qualified_name: str) -> EntityId | None:
        """Resolves a fully qualified name, descending into members for the trailing segments."""
        found = self.by_qualified_name.get(qualified_name)
        if found is not None:
            return found
        head, _, last = qualified_name.rpartition(".")
        if not head:
            return None
        container = self.resolve_qualified(head)
        return self.find_member(container, last) if container is not None else None


    def __len__(self):
        return len(self.entities)

    def __iter__(self):
        return iter(self.entities)

    def __repr__(self):
        return f"EntityTree({len(self.entities)} entities, {len(self.builtins)} built-ins)"
