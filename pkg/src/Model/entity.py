from __future__ import annotations

from dataclasses import dataclass, field

from Model.object_types import EntityKind, SourceLanguage, TypeFlavor

EntityId = int  # dense index into the entity tree, assigned from 0


@dataclass(frozen=True)
class Location:
    """Source span of an entity: file path plus 1-based start and end lines."""
    path: str
    start_line: int
    end_line: int


@dataclass(frozen=True)
class UseSite:
    """A single occurrence position: file path plus 1-based line."""
    path: str
    line: int


@dataclass(eq=False)
class TypeRef:
    """
    Class that represents one occurrence of a type name in the source.

    Attributes:
        - raw_name: The type as written (dotted name, or the text of a function type).
        - use_site: Where the type was written.
        - resolved: The Type entity the name resolved to, once resolution succeeds.
        - receiver: Receiver type of a function type (`Bar.() -> Int`).
        - parameters: Parameter types of a function type.
        - result: Result type of a function type.
        - is_function: True for function types.
    """
    raw_name: str
    use_site: UseSite
    resolved: EntityId | None = None
    receiver: TypeRef | None = None
    parameters: list[TypeRef] = field(default_factory=list)
    result: TypeRef | None = None
    is_function: bool = False

    def components(self) -> list[TypeRef]:
        """The receiver, parameter and result refs of a function type, in that order."""
        parts = [self.receiver] if self.receiver is not None else []
        parts.extend(self.parameters)
        if self.result is not None:
            parts.append(self.result)
        return parts

    def __repr__(self):
        return f"TypeRef({self.raw_name!r} -> {self.resolved})"


@dataclass(eq=False)
class ImportRef:
    """An import directive of a file, resolved against the entity tree."""
    path: str
    use_site: UseSite
    wildcard: bool = False
    alias: str | None = None
    is_static: bool = False
    resolved: EntityId | None = None

    @property
    def visible_name(self) -> str:
        """The simple name the import brings into scope."""
        return self.alias or self.path.rsplit(".", 1)[-1]


@dataclass(eq=False)
class Entity:
    """
    Class that represents a named program element.

    The tuple (id, name, kind, context) of the extraction model is stored as
    id, name and kind, with the context spread over parent, location and the
    flags below. Entities are created without an id and receive one from
    `EntityTree.intern_entity`.
    """
    name: str
    kind: EntityKind
    language: SourceLanguage
    parent: EntityId | None = None
    location: Location | None = None
    id: EntityId = -1
    qualified_name: str = ""
    # Extension functions are marked while the tree is built
    is_extension: bool = False
    receiver_type: TypeRef | None = None
    is_synthetic: bool = False
    delegates_to: TypeRef | None = None
    raw_supertypes: list[TypeRef] = field(default_factory=list)
    raw_return_type: TypeRef | None = None
    raw_parameter_types: list[TypeRef] = field(default_factory=list)
    type_flavor: TypeFlavor | None = None
    modifiers: list[str] = field(default_factory=list)
    annotations: list[TypeRef] = field(default_factory=list)
    is_mutable: bool = False
    is_constructor: bool = False
    is_enum_constant: bool = False
    accessor_of: EntityId | None = None
    # File entities only
    imports: list[ImportRef] = field(default_factory=list)
    package_id: EntityId | None = None

    @property
    def path(self) -> str | None:
        return self.location.path if self.location is not None else None

    def type_refs(self) -> list[TypeRef]:
        """Every raw TypeRef recorded on the entity."""
        refs = list(self.raw_supertypes)
        if self.raw_return_type is not None:
            refs.append(self.raw_return_type)
        refs.extend(self.raw_parameter_types)
        if self.receiver_type is not None:
            refs.append(self.receiver_type)
        if self.delegates_to is not None:
            refs.append(self.delegates_to)
        refs.extend(self.annotations)
        return refs

    def __repr__(self):
        return f"{self.kind} {self.qualified_name or self.name} #{self.id} ({self.language})"
