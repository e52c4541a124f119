from pathlib import Path

import pytest

from Controller.pipeline import ExtractionPipeline
from Controller.resolver import InferenceConfig
from Model.relation import RelationKind

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"
ORACLE = FIXTURES / "corpus_oracle.json"


class Extraction:
    """
    Wraps an ExtractionResult with lookups by qualified name.

    Methods:
        - id: The entity id of a qualified name, synthetic accessors included.
        - relation: The relation between two qualified names, or None.
        - targets: Qualified names of the targets of a source for one kind.
    """
    def __init__(self, result):
        self.result = result
        self.tree = result.tree
        self.store = result.relations


    def id(self, qualified_name: str) -> int:
        found = self.tree.by_qualified_name.get(qualified_name)
        if found is not None:
            return found
        for entity in self.tree:
            if entity.qualified_name == qualified_name:
                return entity.id
        raise KeyError(qualified_name)


    def relation(self, source: str, target: str, kind: RelationKind):
        return self.store.get(self.id(source), self.id(target), kind)


    def targets(self, source: str, kind: RelationKind) -> set[str]:
        source_id = self.id(source)
        return {
            self.tree.entity(relation.target).qualified_name
            for relation in self.store.of_kind(kind)
            if relation.source == source_id
        }


@pytest.fixture(scope="session")
def corpus():
    return Extraction(ExtractionPipeline().extract("kotlin", CORPUS))


@pytest.fixture
def extract(tmp_path):
    """Writes inline sources under a temporary directory and extracts them."""
    def run(sources: dict[str, str], lang: str = "kotlin", max_rounds: int = 5) -> Extraction:
        for name, text in sources.items():
            path = tmp_path / name
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        pipeline = ExtractionPipeline(config=InferenceConfig(max_rounds))
        return Extraction(pipeline.extract(lang, tmp_path))
    return run
