"""Confusion matrices, precision/recall/F1/accuracy and threshold sweeps."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .classify import Decision, check_threshold, decide, score
from .ingest import LabeledCorpus
from .vocab import ModelVector

REPORT_COLUMNS = (
    "threshold", "tp", "fn", "fp", "tn",
    "precision", "recall", "f1", "accuracy_pct", "positive_recall_pct",
)
_REAL_COLUMNS = {"threshold", "precision", "recall", "f1", "accuracy_pct", "positive_recall_pct"}


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fn_: int
    fp: int
    tn: int

    def __post_init__(self):
        if min(self.tp, self.fn_, self.fp, self.tn) < 0:
            raise ValueError(f"confusion counts must be non-negative: {self}")

    @property
    def total(self) -> int:
        return self.tp + self.fn_ + self.fp + self.tn


@dataclass(frozen=True)
class MetricsRow:
    threshold: float
    cm: ConfusionMatrix
    precision: float
    recall: float
    f1: float
    accuracy_pct: float
    positive_recall_pct: float

    def as_record(self) -> dict:
        return {
            "threshold": self.threshold,
            "tp": self.cm.tp,
            "fn": self.cm.fn_,
            "fp": self.cm.fp,
            "tn": self.cm.tn,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "accuracy_pct": self.accuracy_pct,
            "positive_recall_pct": self.positive_recall_pct,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "MetricsRow":
        return cls(
            threshold=float(rec["threshold"]),
            cm=ConfusionMatrix(int(rec["tp"]), int(rec["fn"]), int(rec["fp"]), int(rec["tn"])),
            precision=float(rec["precision"]),
            recall=float(rec["recall"]),
            f1=float(rec["f1"]),
            accuracy_pct=float(rec["accuracy_pct"]),
            positive_recall_pct=float(rec["positive_recall_pct"]),
        )


def confusion(decisions: Sequence[Decision | int], labels: Sequence[int]) -> ConfusionMatrix:
    """Tally predictions against true labels (class 1 is positive)."""
    if len(decisions) != len(labels):
        raise ValueError(f"length mismatch: {len(decisions)} decisions vs {len(labels)} labels")
    if not labels:
        raise ValueError("confusion needs at least one decision")
    tp = fn_ = fp = tn = 0
    for d, y in zip(decisions, labels):
        pred = d.label if isinstance(d, Decision) else d
        if pred == 1 and y == 1:
            tp += 1
        elif pred == 0 and y == 1:
            fn_ += 1
        elif pred == 1 and y == 0:
            fp += 1
        else:
            tn += 1
    return ConfusionMatrix(tp, fn_, fp, tn)


def metrics(cm: ConfusionMatrix, threshold: float) -> MetricsRow:
    """Precision, recall and F1 are 0 wherever their denominator is 0."""
    if cm.total < 1:
        raise ValueError("metrics needs a non-empty confusion matrix")
    precision = cm.tp / (cm.tp + cm.fp) if cm.tp + cm.fp else 0.0
    recall = cm.tp / (cm.tp + cm.fn_) if cm.tp + cm.fn_ else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return MetricsRow(
        threshold=threshold,
        cm=cm,
        precision=precision,
        recall=recall,
        f1=f1,
        accuracy_pct=100 * (cm.tp + cm.tn) / cm.total,
        positive_recall_pct=100 * cm.tp / (cm.tp + cm.fn_) if cm.tp + cm.fn_ else 0.0,
    )


def score_corpus(model: ModelVector, test: LabeledCorpus, match_mode: str = "exact") -> list[float]:
    return [score(model, doc, match_mode) for doc in test]


def sweep_scores(
    similarities: Sequence[float], labels: Sequence[int], thresholds: Iterable[float]
) -> list[MetricsRow]:
    rows = []
    for t in thresholds:
        decisions = [decide(s, t) for s in similarities]
        rows.append(metrics(confusion(decisions, labels), t))
    return rows


def check_thresholds(thresholds: Sequence[float]) -> None:
    if not thresholds:
        raise ValueError("at least one threshold is required")
    for t in thresholds:
        check_threshold(t)
    for t1, t2 in zip(thresholds, thresholds[1:]):
        if not t1 < t2:
            raise ValueError(f"thresholds must be strictly increasing: {t1} then {t2}")


def sweep(
    model: ModelVector,
    test: LabeledCorpus,
    thresholds: Sequence[float],
    match_mode: str = "exact",
) -> list[MetricsRow]:
    """One MetricsRow per threshold; each document is scored once."""
    thresholds = list(thresholds)
    check_thresholds(thresholds)
    if len(test) == 0:
        raise ValueError("sweep needs a non-empty test corpus")
    return sweep_scores(score_corpus(model, test, match_mode), test.labels, thresholds)


def evaluate(
    model: ModelVector, test: LabeledCorpus, threshold: float, match_mode: str = "exact"
) -> MetricsRow:
    return sweep(model, test, [threshold], match_mode)[0]


def format_row(row: MetricsRow) -> list[str]:
    rec = row.as_record()
    return [f"{rec[c]:.6f}" if c in _REAL_COLUMNS else str(rec[c]) for c in REPORT_COLUMNS]


def emit_report(rows: Sequence[MetricsRow], path: str | Path, format: str = "csv") -> None:
    """Write rows as CSV (reals to 6 decimals) or JSON (list of row objects)."""
    if not rows:
        raise ValueError("emit_report needs at least one row")
    path = Path(path)
    if format == "csv":
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(REPORT_COLUMNS)
            writer.writerows(format_row(r) for r in rows)
    elif format == "json":
        path.write_text(json.dumps([r.as_record() for r in rows], indent=2) + "\n", encoding="utf-8")
    else:
        raise ValueError(f"unknown report format {format!r}; expected 'csv' or 'json'")


def read_report(path: str | Path, format: str = "csv") -> list[MetricsRow]:
    path = Path(path)
    if format == "json":
        return [MetricsRow.from_record(rec) for rec in json.loads(path.read_text(encoding="utf-8"))]
    with open(path, newline="", encoding="utf-8") as fh:
        return [MetricsRow.from_record(rec) for rec in csv.DictReader(fh)]
