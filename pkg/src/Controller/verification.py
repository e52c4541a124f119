from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from Model.entity_tree import EntityTree
from Model.relation import DependencyRelation, RelationStore

# (source qualified name, target qualified name, kind, "source->target")
MatchKey = tuple[str, str, str, str]


@dataclass(frozen=True)
class ExpectedRelation:
    source: str
    target: str
    kind: str
    language_pair: tuple[str, str]

    @property
    def key(self) -> MatchKey:
        return (self.source, self.target, self.kind, _pair_label(self.language_pair))


@dataclass
class GroundTruth:
    """A hand-enumerated list of expected relations. Records are unique."""
    records: list[ExpectedRelation] = field(default_factory=list)

    def __post_init__(self):
        seen = set()
        for record in self.records:
            if record.key in seen:
                raise ValueError(f"Duplicate ground-truth record {record.key}")
            seen.add(record.key)

    @classmethod
    def from_json(cls, document: list[dict]) -> GroundTruth:
        return cls([
            ExpectedRelation(
                source=item["source"], target=item["target"], kind=item["kind"],
                language_pair=tuple(item["languagePair"]),
            )
            for item in document
        ])

    def keys(self) -> set[MatchKey]:
        return {record.key for record in self.records}

    def __len__(self):
        return len(self.records)


def load_ground_truth(path) -> GroundTruth:
    """
    Reads a ground-truth file: a JSON list of
    {source, target, kind, languagePair} records.

    Raises:
        - ValueError: On duplicate records.
    """
    return GroundTruth.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def _ratio(numerator: int, denominator: int) -> float | None:
    return numerator / denominator if denominator > 0 else None


def _pair_label(pair) -> str:
    return f"{pair[0]}->{pair[1]}"


@dataclass
class AccuracyCounts:
    found: int = 0
    not_found: int = 0
    missed: int = 0

    @property
    def precision(self) -> float | None:
        return _ratio(self.found, self.found + self.not_found)

    @property
    def recall(self) -> float | None:
        return _ratio(self.found, self.found + self.missed)

    def to_dict(self) -> dict:
        return {
            "found": self.found, "notFound": self.not_found, "missed": self.missed,
            "precision": self.precision, "recall": self.recall,
        }


@dataclass
class AccuracyReport(AccuracyCounts):
    """
    Precision and recall of an extraction against a ground truth, overall,
    per relation kind and per language pair. Ratios with a zero denominator
    are None.
    """
    per_kind: dict[str, AccuracyCounts] = field(default_factory=dict)
    per_pair: dict[str, AccuracyCounts] = field(default_factory=dict)

    @classmethod
    def from_counts(cls, found: int, not_found: int, missed: int) -> AccuracyReport:
        return cls(found=found, not_found=not_found, missed=missed)

    def tally(self, key: MatchKey, outcome: str) -> None:
        _, _, kind, pair = key
        for bucket in (self, self.per_kind.setdefault(kind, AccuracyCounts()), self.per_pair.setdefault(pair, AccuracyCounts())):
            setattr(bucket, outcome, getattr(bucket, outcome) + 1)

    def to_json(self) -> str:
        document = self.to_dict()
        document["perKind"] = {kind: counts.to_dict() for kind, counts in sorted(self.per_kind.items())}
        document["perLanguagePair"] = {pair: counts.to_dict() for pair, counts in sorted(self.per_pair.items())}
        return json.dumps(document, indent=2)


def relation_keys(store: RelationStore, tree: EntityTree, relation: DependencyRelation) -> list[MatchKey]:
    """
    The keys an extracted relation may match. A relation to a synthetic
    accessor also matches a record naming the accessor's property.
    """
    source = tree.entity(relation.source).qualified_name
    target = tree.entity(relation.target)
    pair = _pair_label([str(language) for language in store.language_pair(relation)])
    kind = str(relation.kind)
    keys = [(source, target.qualified_name, kind, pair)]
    if target.accessor_of is not None:
        keys.append((source, tree.entity(target.accessor_of).qualified_name, kind, pair))
    return keys


def compare(store: RelationStore, tree: EntityTree, truth: GroundTruth) -> AccuracyReport:
    """
    Compares extracted relations with a ground truth by qualified names,
    kind and language pair. Weights are ignored and each truth record is
    found at most once.

    Args:
        - store: The extracted relations.
        - tree: The entity tree the relations refer to.
        - truth: The expected relations.

    Returns:
        - The AccuracyReport.
    """
    expected = truth.keys()
    matched: set[MatchKey] = set()
    seen: set[MatchKey] = set()
    report = AccuracyReport()

    for relation in store.relations():
        keys = relation_keys(store, tree, relation)
        if keys[0] in seen:
            continue
        seen.add(keys[0])
        hits = [key for key in keys if key in expected]
        hit = next((key for key in hits if key not in matched), None)
        if hits and hit is None:
            # Getter and setter both name the same property record
            continue
        if hit is not None:
            matched.add(hit)
            report.tally(hit, "found")
        else:
            report.tally(keys[0], "not_found")

    for record in truth.records:
        if record.key not in matched:
            report.tally(record.key, "missed")
    return report
