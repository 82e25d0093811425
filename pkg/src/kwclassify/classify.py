"""Document feature vectors, cosine similarity and threshold decisions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .ingest import Document
from .tokens import count_text
from .vocab import ModelVector

DEFAULT_THRESHOLD = 0.6


@dataclass(frozen=True)
class DocVector:
    model_id: str
    counts: tuple[int, ...]


@dataclass(frozen=True)
class Decision:
    similarity: float
    label: int
    threshold: float


def doc_vector(model: ModelVector, doc: Document, match_mode: str = "exact") -> DocVector:
    tc = count_text(doc.text)
    return DocVector(model.model_id, tuple(tc.match(kw, match_mode) for kw in model.keywords))


def cosine_similarity(a: Sequence[float], b: Sequence[float]) -> float:
    """a.b / (|a| |b|), defined as 0.0 when either vector has zero norm.

    Integer inputs are accumulated exactly; the only rounding is in the
    final square root and division.
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if len(a) == 0:
        raise ValueError("vectors must have length >= 1")
    dot = sum(x * y for x, y in zip(a, b))
    na = sum(x * x for x in a)
    nb = sum(y * y for y in b)
    if na == 0 or nb == 0:
        return 0.0
    sim = dot / (math.sqrt(na) * math.sqrt(nb))
    return min(1.0, max(0.0, sim))


def check_threshold(threshold: float) -> None:
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must lie in [0, 1], got {threshold}")


def decide(similarity: float, threshold: float) -> Decision:
    return Decision(similarity, 0 if similarity < threshold else 1, threshold)


def score(model: ModelVector, doc: Document, match_mode: str = "exact") -> float:
    return cosine_similarity(model.counts, doc_vector(model, doc, match_mode).counts)


def classify(
    model: ModelVector,
    doc: Document,
    threshold: float = DEFAULT_THRESHOLD,
    match_mode: str = "exact",
) -> Decision:
    check_threshold(threshold)
    return decide(score(model, doc, match_mode), threshold)
