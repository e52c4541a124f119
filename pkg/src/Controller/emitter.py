from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from graphviz import Digraph

from Controller.custom_exception import EmitError
from Controller.logger import get_logger
from Model.entity import Entity
from Model.entity_tree import EntityTree
from Model.object_types import EntityKind, SourceLanguage
from Model.relation import DependencyRelation, RelationStore

FORMATS = ("json", "dot")
GRANULARITIES = ("file", "structure")
NAME_PATTERNS = ("dot", "unix")
SCHEMA_VERSION = "1.0"

# Edge colors by language pair
_PAIR_COLORS = {
    (SourceLanguage.KOTLIN, SourceLanguage.JAVA): "orange",
    (SourceLanguage.JAVA, SourceLanguage.KOTLIN): "green",
}
_SAME_LANGUAGE_COLOR = "gray"


@dataclass(frozen=True)
class EmitOptions:
    """
    Output settings collected from the command line.

    Attributes:
        - format: "json" or "dot".
        - granularity: "file" (matrix) or "structure" (entity-level detail).
        - show_language: Suffix relation names with their language pair.
        - strip_leading_path: Print file paths relative to source_root.
        - emit_name_map: Also write the id -> qualified name map.
        - output_dir: Directory of the written files.
        - output_name: Base name of the written files.
        - name_pattern: Separator of qualified names, "dot" or "unix".
        - source_root: The analysed source directory, used when stripping paths.
    """
    format: str = "json"
    granularity: str = "file"
    show_language: bool = False
    strip_leading_path: bool = False
    emit_name_map: bool = False
    output_dir: str = "."
    output_name: str = "depends"
    name_pattern: str = "dot"
    source_root: str | None = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"Unknown output format '{self.format}'")
        if self.granularity not in GRANULARITIES:
            raise ValueError(f"Unknown granularity '{self.granularity}'")
        if self.name_pattern not in NAME_PATTERNS:
            raise ValueError(f"Unknown name pattern '{self.name_pattern}'")
        if self.granularity == "structure" and self.format != "json":
            raise ValueError("Granularity 'structure' requires the json format")


# --- naming ---

def display_path(path: str, options: EmitOptions) -> str:
    """A file path as printed: relative to the source root when stripping, always with '/'."""
    if options.strip_leading_path and options.source_root is not None:
        path = os.path.relpath(path, options.source_root)
    return path.replace("\\", "/")


def display_name(entity: Entity, options: EmitOptions) -> str:
    if options.name_pattern == "unix" and entity.kind is not EntityKind.FILE:
        return entity.qualified_name.replace(".", "/")
    return entity.qualified_name


def relation_name(store: RelationStore, relation: DependencyRelation, options: EmitOptions) -> str:
    """The relation kind, suffixed with `(source->target)` languages when show_language is set."""
    if not options.show_language:
        return str(relation.kind)
    source_language, target_language = store.language_pair(relation)
    return f"{relation.kind}({source_language}->{target_language})"


def _to_bytes(document) -> bytes:
    return (json.dumps(document, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _file_index(tree: EntityTree, options: EmitOptions) -> tuple[list[str], dict[int, int]]:
    """The ordered file list and the index of each File entity in it."""
    files = {entity.id: display_path(entity.path, options) for entity in tree.of_kind(EntityKind.FILE) if entity.path}
    variables = sorted(set(files.values()))
    position = {path: index for index, path in enumerate(variables)}
    return variables, {file_id: position[path] for file_id, path in files.items()}


def _cross_file(tree: EntityTree, relation: DependencyRelation, index: dict[int, int]) -> tuple[int, int] | None:
    source_file = tree.file_of(relation.source)
    target_file = tree.file_of(relation.target)
    if source_file not in index or target_file not in index:
        return None
    src, dest = index[source_file], index[target_file]
    return (src, dest) if src != dest else None


# --- emitters ---

def emit_matrix(store: RelationStore, tree: EntityTree, options: EmitOptions) -> bytes:
    """
    Aggregates the relations into a file-by-file dependency matrix.

    Args:
        - store: The extracted relations.
        - tree: The entity tree.
        - options: The output options.

    Returns:
        - The matrix JSON, UTF-8 encoded.
    """
    variables, index = _file_index(tree, options)
    cells: dict[tuple[int, int], Counter] = {}
    for relation in store.relations():
        pair = _cross_file(tree, relation, index)
        if pair is None:
            continue
        cells.setdefault(pair, Counter())[relation_name(store, relation, options)] += relation.weight

    return _to_bytes({
        "schemaVersion": SCHEMA_VERSION,
        "name": options.output_name,
        "variables": variables,
        "cells": [
            {"src": src, "dest": dest, "values": dict(sorted(values.items()))}
            for (src, dest), values in sorted(cells.items())
        ],
    })


def _entity_record(entity: Entity, options: EmitOptions) -> dict:
    location = None
    if entity.location is not None:
        location = {
            "path": display_path(entity.location.path, options),
            "startLine": entity.location.start_line,
            "endLine": entity.location.end_line,
        }
    flags = {
        "isExtension": entity.is_extension,
        "isSynthetic": entity.is_synthetic,
        "isConstructor": entity.is_constructor,
        "isEnumConstant": entity.is_enum_constant,
        "isMutable": entity.is_mutable,
    }
    if entity.type_flavor is not None:
        flags["typeFlavor"] = str(entity.type_flavor)
    if entity.accessor_of is not None:
        flags["accessorOf"] = entity.accessor_of
    return {
        "id": entity.id,
        "name": entity.name,
        "qualifiedName": display_name(entity, options),
        "kind": str(entity.kind),
        "language": str(entity.language),
        "parent": entity.parent,
        "location": location,
        "flags": flags,
    }


def emit_detail(tree: EntityTree, store: RelationStore, options: EmitOptions) -> bytes:
    """Serializes every entity and every relation, unaggregated."""
    relations = []
    for relation in store.relations():
        source_language, target_language = store.language_pair(relation)
        relations.append({
            "source": relation.source,
            "target": relation.target,
            "kind": str(relation.kind),
            "weight": relation.weight,
            "languagePair": [str(source_language), str(target_language)],
            "locations": [
                {"path": display_path(site.path, options), "line": site.line} for site in relation.locations
            ],
        })
    return _to_bytes({
        "entities": [_entity_record(entity, options) for entity in tree],
        "relations": relations,
    })


class DependencyGraph:
    """
    Class to draw the file-level dependency graph with graphviz.

    Attributes:
        - graph: Digraph object from the graphviz library.
        - node_names: File index -> graph node name.

    Methods:
        - add_node: Adds a file node.
        - add_edge: Adds a dependency edge colored by its language pair.
    """
    def __init__(self, name: str):
        self.graph = Digraph(name=name, comment="File dependencies")
        self.node_names: dict[int, str] = {}


    def add_node(self, index: int, label: str) -> str:
        node_name = f"file{index}"
        self.graph.node(node_name, label, shape="box")
        self.node_names[index] = node_name
        return node_name


    def add_edge(self, src: int, dest: int, pair: tuple[SourceLanguage, SourceLanguage], kinds: Counter):
        source_language, target_language = pair
        label = ", ".join(f"{kind}:{count}" for kind, count in sorted(kinds.items()))
        self.graph.edge(
            self.node_names[src], self.node_names[dest],
            label=f"{label} ({source_language}->{target_language})",
            color=_PAIR_COLORS.get(pair, _SAME_LANGUAGE_COLOR),
        )


    @property
    def source(self) -> str:
        return self.graph.source


def emit_graph(store: RelationStore, tree: EntityTree, options: EmitOptions) -> bytes:
    """
    Draws one node per file and one edge per (source file, target file,
    language pair), labelled with the relation counts.

    Returns:
        - The DOT source, UTF-8 encoded.
    """
    variables, index = _file_index(tree, options)
    graph = DependencyGraph(options.output_name)
    for position, path in enumerate(variables):
        graph.add_node(position, path)

    edges: dict[tuple[int, int, tuple], Counter] = {}
    for relation in store.relations():
        pair = _cross_file(tree, relation, index)
        if pair is None:
            continue
        languages = store.language_pair(relation)
        edges.setdefault((pair[0], pair[1], languages), Counter())[str(relation.kind)] += relation.weight

    for (src, dest, languages), kinds in sorted(edges.items(), key=lambda item: (item[0][0], item[0][1], str(item[0][2]))):
        graph.add_edge(src, dest, languages, kinds)
    return graph.source.encode("utf-8")


def emit_name_map(tree: EntityTree, options: EmitOptions) -> bytes:
    """The id -> qualified name map of every entity."""
    return _to_bytes({str(entity.id): display_name(entity, options) for entity in tree})


def write_outputs(tree: EntityTree, store: RelationStore, options: EmitOptions, logger=None) -> list[Path]:
    """
    Writes the result files: `<name>.json` (matrix or detail by granularity),
    `<name>.dot` for the dot format and `<name>-map.json` when requested.

    Returns:
        - The written paths.

    Raises:
        - EmitError: When a file cannot be written.
    """
    logger = get_logger(__name__, logger)
    directory = Path(options.output_dir)
    outputs: list[tuple[Path, bytes]] = []

    if options.granularity == "structure":
        outputs.append((directory / f"{options.output_name}.json", emit_detail(tree, store, options)))
    else:
        outputs.append((directory / f"{options.output_name}.json", emit_matrix(store, tree, options)))
    if options.format == "dot":
        outputs.append((directory / f"{options.output_name}.dot", emit_graph(store, tree, options)))
    if options.emit_name_map:
        outputs.append((directory / f"{options.output_name}-map.json", emit_name_map(tree, options)))

    written = []
    for path, content in outputs:
        try:
            directory.mkdir(parents=True, exist_ok=True)
            path.write_bytes(content)
        except OSError as error:
            raise EmitError(path, error) from error
        logger.success(f"Result saved as {path}")
        written.append(path)
    return written
