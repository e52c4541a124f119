from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

import click

from Controller.custom_exception import DependsError, ParseError
from Controller.emitter import EmitOptions, write_outputs
from Controller.logger import get_logger
from Controller.resolver import InferenceConfig, RelationResolver
from Controller.verification import compare, load_ground_truth
from Language.registry import LanguageRegistry, ProcessorDescriptor, default_registry
from Model.entity_tree import EntityTree
from Model.parse_tree import FileNode
from Model.relation import RelationStore

PARSING = "Source File Parsing"
ENTITY_EXTRACTION = "Entity Extraction"
RELATION_EXTRACTION = "Dependency Relation Extraction"
RESULT_OUTPUT = "Result Output"
STAGES = (PARSING, ENTITY_EXTRACTION, RELATION_EXTRACTION, RESULT_OUTPUT)


@dataclass
class CliRequest:
    """
    A parsed command line.

    Attributes:
        - lang, src, output: The mandatory positionals.
        - includes: Extra directories searched for sources.
        - auto_include: Walk the include directories recursively.
        - output_dir, format, granularity, strip_leading_path, show_language,
          emit_name_map, name_pattern: Output options.
        - truth: Optional ground-truth file to verify against.
        - debug: DEBUG logging.
        - max_rounds: Inference round bound.
    """
    lang: str
    src: str
    output: str
    includes: list[str] = field(default_factory=list)
    auto_include: bool = False
    output_dir: str = "."
    format: str = "json"
    granularity: str = "file"
    strip_leading_path: bool = False
    show_language: bool = False
    emit_name_map: bool = False
    name_pattern: str = "dot"
    truth: str | None = None
    debug: bool = False
    max_rounds: int = 5

    def emit_options(self) -> EmitOptions:
        return EmitOptions(
            format=self.format, granularity=self.granularity, show_language=self.show_language,
            strip_leading_path=self.strip_leading_path, emit_name_map=self.emit_name_map,
            output_dir=self.output_dir, output_name=self.output, name_pattern=self.name_pattern,
            source_root=self.src,
        )


@dataclass
class TimingReport:
    """Wall time of each pipeline stage, in seconds."""
    stages: dict[str, float] = field(default_factory=dict)
    total: float = 0.0

    @contextmanager
    def stage(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.stages[name] = self.stages.get(name, 0.0) + time.perf_counter() - start

    def lines(self) -> list[str]:
        rows = [f"{name}: {self.stages.get(name, 0.0):.3f}s" for name in STAGES]
        rows.append(f"Total: {self.total:.3f}s")
        return rows

    def __str__(self):
        return "\n".join(self.lines())


@dataclass
class ExtractionResult:
    """Everything an extraction run produced."""
    tree: EntityTree
    relations: RelationStore
    asts: list[FileNode] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)
    rounds: int = 0


class ExtractionPipeline:
    """
    Runs source discovery, parsing, entity extraction and relation
    extraction over a source tree.

    Methods:
        - discover: Lists the source files to analyse.
        - parse: Parses the files, skipping the ones that fail.
        - build_entities: Interns the entities of every parsed file.
        - extract: Runs the three analysis stages, timing each.
    """
    def __init__(self, registry: LanguageRegistry | None = None, config: InferenceConfig | None = None, logger=None):
        self.registry = registry or default_registry()
        self.config = config or InferenceConfig()
        self.logger = get_logger(__name__, logger)


    def discover(self, src, processors: list[ProcessorDescriptor], includes=(), auto_include: bool = False) -> list[Path]:
        """
        Finds the files claimed by the processors: everything under `src`,
        plus the top level of each include directory (all of it with
        `auto_include`). Sorted lexicographically.
        """
        extensions = {extension for processor in processors for extension in processor.extensions}
        found = set()
        for path in Path(src).rglob("*"):
            if path.is_file() and path.suffix in extensions:
                found.add(path)
        for include in includes:
            candidates = Path(include).rglob("*") if auto_include else Path(include).glob("*")
            for path in candidates:
                if path.is_file() and path.suffix in extensions:
                    found.add(path)
        return sorted(found, key=lambda path: path.as_posix())


    def parse(self, paths: list[Path], diagnostics: list[str]) -> list[tuple[ProcessorDescriptor, FileNode]]:
        parsed = []
        for path in paths:
            descriptor = self.registry.for_path(path.as_posix())
            try:
                source = path.read_text(encoding="utf-8", errors="replace")
                ast = descriptor.parse_entry(source, path.as_posix(), self.logger)
            except ParseError as error:
                self.logger.warning(f"Skipping {path}: {error}")
                diagnostics.append(str(error))
                continue
            except OSError as error:
                self.logger.warning(f"Cannot read {path}: {error}")
                diagnostics.append(f"{path}: {error}")
                continue
            for message in ast.diagnostics:
                self.logger.debug(message)
            diagnostics.extend(ast.diagnostics)
            parsed.append((descriptor, ast))
        self.logger.info(f"Parsed {len(parsed)} of {len(paths)} files")
        return parsed


    def build_entities(self, parsed: list[tuple[ProcessorDescriptor, FileNode]]) -> EntityTree:
        tree = EntityTree.with_builtins()
        for descriptor, ast in parsed:
            descriptor.build_entry(ast, tree, self.logger)
        self.logger.info(f"Extracted {len(tree) - len(tree.builtins)} entities")
        return tree


    def extract(self, lang: str, src, includes=(), auto_include: bool = False,
                timing: TimingReport | None = None) -> ExtractionResult:
        """
        Runs parsing, entity extraction and relation extraction.

        Raises:
            - UnknownLanguage: When `lang` is not registered.
            - DuplicateEntity: When a type or property is declared twice.
        """
        timing = timing or TimingReport()
        processors = self.registry.processors_for_request(lang)
        diagnostics: list[str] = []

        with timing.stage(PARSING):
            paths = self.discover(src, processors, includes, auto_include)
            parsed = self.parse(paths, diagnostics)
        with timing.stage(ENTITY_EXTRACTION):
            tree = self.build_entities(parsed)
        with timing.stage(RELATION_EXTRACTION):
            asts = [ast for _, ast in parsed]
            resolver = RelationResolver(tree, asts, self.config, self.logger)
            store = resolver.resolve_all()
            diagnostics.extend(resolver.diagnostics)
        self.logger.info(f"Extracted {len(store)} relations in {resolver.rounds_used} inference rounds")
        return ExtractionResult(tree, store, asts, diagnostics, resolver.rounds_used)


def run_pipeline(request: CliRequest, logger=None) -> tuple[int, TimingReport]:
    """
    Runs a whole extraction for a command line and prints the stage timings.

    Returns:
        - (exit code, timing report). The exit code is 0 when at least one
          file was parsed and every output was written.
    """
    logger = get_logger(__name__, logger)
    timing = TimingReport()
    start = time.perf_counter()
    exit_code = 0
    try:
        if not Path(request.src).is_dir():
            raise DependsError(f"Source directory '{request.src}' does not exist or is not readable")
        pipeline = ExtractionPipeline(config=InferenceConfig(request.max_rounds), logger=logger)
        result = pipeline.extract(request.lang, request.src, request.includes, request.auto_include, timing)
        if not result.asts:
            raise DependsError(f"no source files found under '{request.src}'")

        with timing.stage(RESULT_OUTPUT):
            write_outputs(result.tree, result.relations, request.emit_options(), logger)

        if request.truth is not None:
            report = compare(result.relations, result.tree, load_ground_truth(request.truth))
            click.echo(report.to_json())
    except (DependsError, ValueError) as error:
        logger.error(str(error))
        exit_code = 1
    finally:
        timing.total = time.perf_counter() - start

    for line in timing.lines():
        click.echo(line)
    return exit_code, timing
