import json
from pathlib import Path

import pytest

from Controller.verification import (
    AccuracyCounts, AccuracyReport, ExpectedRelation, GroundTruth, compare, load_ground_truth,
)

ORACLE = Path(__file__).parent / "fixtures" / "corpus_oracle.json"


def test_precision_and_recall_arithmetic():
    report = AccuracyReport.from_counts(found=9, not_found=1, missed=3)

    assert report.precision == pytest.approx(0.9)
    assert report.recall == pytest.approx(0.75)


def test_empty_counts_have_no_ratios():
    counts = AccuracyCounts()

    assert counts.precision is None
    assert counts.recall is None
    assert counts.to_dict()["precision"] is None


def test_duplicate_records_are_rejected():
    record = ExpectedRelation("A.f", "B", "Call", ("kotlin", "java"))

    with pytest.raises(ValueError):
        GroundTruth([record, ExpectedRelation("A.f", "B", "Call", ("kotlin", "java"))])


def test_ground_truth_file_is_read():
    truth = load_ground_truth(ORACLE)

    assert len(truth) == 42
    assert ("FooJava.func", "BarKotlin.getX", "Call", "java->kotlin") in truth.keys()


def test_corpus_matches_its_oracle(corpus):
    report = compare(corpus.store, corpus.tree, load_ground_truth(ORACLE))

    assert (report.found, report.not_found, report.missed) == (42, 0, 0)
    assert report.precision == 1.0
    assert report.recall == 1.0
    assert report.per_pair["java->kotlin"].found == 7
    assert report.per_kind["Extension"].found == 2


def test_accessor_calls_match_records_naming_the_property(corpus):
    truth = GroundTruth([ExpectedRelation("FooJava.func", "BarKotlin.x", "Call", ("java", "kotlin"))])

    report = compare(corpus.store, corpus.tree, truth)

    assert report.per_kind["Call"].found == 1
    assert report.missed == 0


def test_missing_and_extra_relations_are_counted(corpus):
    truth = GroundTruth([
        ExpectedRelation("calculate", "Bar", "Parameter", ("kotlin", "kotlin")),
        ExpectedRelation("calculate", "Foo", "Parameter", ("kotlin", "kotlin")),
    ])

    report = compare(corpus.store, corpus.tree, truth)

    assert report.found == 1
    assert report.missed == 1
    assert report.not_found == len(corpus.store) - 1
    assert report.per_kind["Parameter"].missed == 1


def test_report_json_has_breakdowns():
    report = AccuracyReport()
    report.tally(("A", "B", "Use", "java->java"), "found")
    report.tally(("A", "C", "Call", "java->kotlin"), "missed")

    document = json.loads(report.to_json())

    assert document["found"] == 1 and document["missed"] == 1
    assert document["perKind"]["Use"]["precision"] == 1.0
    assert document["perLanguagePair"]["java->kotlin"]["recall"] == 0.0


def test_getter_and_setter_calls_find_one_property_record(extract):
    result = extract({
        "Bar.kt": "class Bar(var x: Int)\n",
        "Foo.java": "public class Foo {\n    public static void f(Bar bar) {\n        bar.setX(bar.getX());\n    }\n}\n",
    })
    truth = GroundTruth([ExpectedRelation("Foo.f", "Bar.x", "Call", ("java", "kotlin"))])

    report = compare(result.store, result.tree, truth)

    assert report.found == 1
    assert report.found + report.missed == len(truth)
    assert report.per_kind["Call"].not_found == 0
