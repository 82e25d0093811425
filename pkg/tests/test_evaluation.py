import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from kwclassify.classify import Decision, classify
from kwclassify.evaluation import (
    ConfusionMatrix,
    confusion,
    emit_report,
    evaluate,
    metrics,
    read_report,
    sweep,
    sweep_scores,
)
from kwclassify.ingest import Document, LabeledCorpus
from kwclassify.vocab import ModelVector

from .conftest import GOLDEN

CM_AT_060 = ConfusionMatrix(tp=46, fn_=4, fp=2, tn=48)
CM_AT_065 = ConfusionMatrix(tp=39, fn_=11, fp=1, tn=49)


def test_confusion_perfect():
    decisions = [Decision(1.0, 1, 0.5), Decision(0.9, 1, 0.5), Decision(0.1, 0, 0.5), Decision(0, 0, 0.5)]
    assert confusion(decisions, [1, 1, 0, 0]) == ConfusionMatrix(2, 0, 0, 2)


def test_confusion_reference_matrices():
    preds = [1] * 46 + [0] * 4 + [1] * 2 + [0] * 48
    labels = [1] * 50 + [0] * 50
    assert confusion(preds, labels) == CM_AT_060
    preds = [1] * 39 + [0] * 11 + [1] * 1 + [0] * 49
    assert confusion(preds, labels) == CM_AT_065


def test_confusion_errors():
    with pytest.raises(ValueError, match="length mismatch"):
        confusion([1], [1, 0])
    with pytest.raises(ValueError):
        confusion([], [])


def test_metrics_46_4_2_48():
    row = metrics(CM_AT_060, 0.6)
    assert row.precision == pytest.approx(46 / 48)
    assert row.recall == pytest.approx(0.92)
    assert row.f1 == pytest.approx(92 / 98)
    assert row.accuracy_pct == 94.0
    assert row.positive_recall_pct == 92.0


def test_metrics_39_11_1_49():
    row = metrics(CM_AT_065, 0.65)
    assert row.precision == 0.975
    assert row.recall == pytest.approx(0.78)
    assert row.f1 == pytest.approx(78 / 90)
    assert row.accuracy_pct == 88.0


def test_metrics_all_negative():
    row = metrics(ConfusionMatrix(0, 0, 0, 10), 0.5)
    assert (row.precision, row.recall, row.f1, row.accuracy_pct) == (0.0, 0.0, 0.0, 100.0)


@given(st.tuples(*[st.integers(0, 200)] * 4).filter(lambda t: sum(t) > 0))
def test_metrics_identities(counts):
    cm = ConfusionMatrix(*counts)
    row = metrics(cm, 0.5)
    assert row.accuracy_pct / 100 == pytest.approx((cm.tp + cm.tn) / cm.total, abs=1e-15)
    if row.precision + row.recall > 0:
        assert abs(row.f1 * (row.precision + row.recall) - 2 * row.precision * row.recall) < 1e-12
    assert row.positive_recall_pct == pytest.approx(100 * row.recall)
    for v in (row.precision, row.recall, row.f1):
        assert 0.0 <= v <= 1.0


MODEL = ModelVector(("breach", "owe", "rent"), (9, 4, 2))
TEST = LabeledCorpus(
    (
        Document("a", "breach breach owe rent", 1),
        Document("b", "breach owe owe owe", 1),
        Document("c", "rent rent rent", 1),
        Document("d", "owe", 0),
        Document("e", "nothing", 0),
        Document("f", "breach owe", 0),
    )
)


def test_sweep_single_threshold_matches_unbatched():
    for t in (0.0, 0.3, 0.6, 0.85, 1.0):
        direct = metrics(confusion([classify(MODEL, d, t) for d in TEST], TEST.labels), t)
        assert sweep(MODEL, TEST, [t]) == [direct]
        assert evaluate(MODEL, TEST, t) == direct


def test_sweep_monotone():
    thresholds = [i / 20 for i in range(21)]
    rows = sweep(MODEL, TEST, thresholds)
    assert len(rows) == 21
    for r1, r2 in zip(rows, rows[1:]):
        assert r2.cm.tp <= r1.cm.tp and r2.cm.fp <= r1.cm.fp


@given(st.lists(st.floats(0, 1), min_size=1, max_size=30), st.data())
def test_sweep_scores_subset_property(sims, data):
    labels = data.draw(st.lists(st.integers(0, 1), min_size=len(sims), max_size=len(sims)))
    ts = sorted(set(data.draw(st.lists(st.floats(0, 1), min_size=2, max_size=6))))
    rows = sweep_scores(sims, labels, ts)
    positives = [{i for i, s in enumerate(sims) if s >= t} for t in ts]
    for lo, hi in zip(positives, positives[1:]):
        assert hi <= lo
    for row, pos in zip(rows, positives):
        assert row.cm.tp + row.cm.fp == len(pos)


@pytest.mark.parametrize("bad", [[0.7, 0.6], [0.6, 0.6], [0.5, 1.5], []])
def test_sweep_rejects_bad_grid(bad):
    with pytest.raises(ValueError):
        sweep(MODEL, TEST, bad)


def test_sweep_rejects_empty_corpus():
    with pytest.raises(ValueError, match="non-empty"):
        sweep(MODEL, LabeledCorpus(()), [0.5])


def test_emit_one_row_csv(tmp_path):
    emit_report([metrics(CM_AT_060, 0.6)], tmp_path / "r.csv")
    lines = (tmp_path / "r.csv").read_text().splitlines()
    assert lines[0] == "threshold,tp,fn,fp,tn,precision,recall,f1,accuracy_pct,positive_recall_pct"
    assert len(lines) == 2


def test_emit_json_roundtrip(tmp_path):
    rows = sweep(MODEL, TEST, [0.1, 0.5, 0.9])
    emit_report(rows, tmp_path / "r.json", "json")
    assert read_report(tmp_path / "r.json", "json") == rows
    assert isinstance(json.loads((tmp_path / "r.json").read_text()), list)


def test_emit_errors(tmp_path):
    with pytest.raises(ValueError):
        emit_report([], tmp_path / "r.csv")
    with pytest.raises(ValueError, match="format"):
        emit_report([metrics(CM_AT_060, 0.6)], tmp_path / "r.x", "xml")
    with pytest.raises(OSError):
        emit_report([metrics(CM_AT_060, 0.6)], tmp_path / "missing" / "r.csv")


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_reference_golden_files(tmp_path, fmt):
    # golden files were written by hand, not by emit_report
    rows = [metrics(CM_AT_060, 0.6), metrics(CM_AT_065, 0.65)]
    out = tmp_path / f"rows.{fmt}"
    emit_report(rows, out, fmt)
    assert out.read_bytes() == (GOLDEN / f"reference_rows.{fmt}").read_bytes()
