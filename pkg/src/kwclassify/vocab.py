"""Candidate keyword curation, corpus tallying and top-K model selection."""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field
from datetime import datetime, timezone
from itertools import islice
from operator import itemgetter, le, neg
from pathlib import Path
from typing import Mapping

from .errors import CandidateError, InsufficientVocabularyError, ModelValidationError
from .ingest import LabeledCorpus
from .tokens import count_text, normalize

DEFAULT_K = 20
DEFAULT_CANDIDATES = 50


@dataclass(frozen=True)
class CandidateSet:
    keywords: tuple[str, ...]
    source: str = ""

    def __len__(self) -> int:
        return len(self.keywords)


def parse_candidates(text: str, source: str = "") -> CandidateSet:
    keywords: list[str] = []
    seen: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = normalize(line)
        if len(toks) != 1:
            raise CandidateError(
                f"{source or '<candidates>'}:{lineno}: keyword {line!r} normalizes to "
                f"{len(toks)} tokens; exactly one is required"
            )
        kw = toks[0]
        if kw in seen:
            raise CandidateError(
                f"{source or '<candidates>'}:{lineno}: duplicate keyword {line!r} "
                f"(same as {seen[kw]!r} after normalization)"
            )
        seen[kw] = line
        keywords.append(kw)
    if not keywords:
        raise CandidateError(f"empty candidate set: {source or '<candidates>'}")
    return CandidateSet(tuple(keywords), source)


def load_candidates(path: str | Path) -> CandidateSet:
    """Read a candidate file: one keyword per line, ``#`` comments, blanks ignored."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"candidate file not found: {path}")
    return parse_candidates(path.read_text(encoding="utf-8"), str(path))


def tally_candidates(
    candidates: CandidateSet, train: LabeledCorpus, match_mode: str = "exact"
) -> dict[str, int]:
    """Total term frequency of each candidate over the class-1 training documents."""
    positives = [d for d in train if d.label == 1]
    if not positives:
        raise ValueError("tally_candidates needs at least one class-1 training document")
    totals: Counter[str] = Counter({kw: 0 for kw in candidates.keywords})
    for doc in positives:
        tc = count_text(doc.text)
        for kw in candidates.keywords:
            totals[kw] += tc.match(kw, match_mode)
    return {kw: totals[kw] for kw in candidates.keywords}


def rank_tallies(tallies: Mapping[str, int]) -> list[tuple[str, int]]:
    """All (keyword, count) pairs, count descending, ties by keyword ascending."""
    # two stable passes: keyword ascending, then count descending
    ranked = sorted(tallies.items(), key=itemgetter(0))
    ranked.sort(key=itemgetter(1), reverse=True)
    return ranked


@dataclass(frozen=True)
class ModelMetadata:
    train_docs: int = 0
    candidates_file: str = ""
    built_at: str = ""


@dataclass(frozen=True)
class ModelVector:
    """The corpus feature vector: K keywords and their training totals."""

    keywords: tuple[str, ...]
    counts: tuple[int, ...]
    metadata: ModelMetadata = field(default_factory=ModelMetadata)

    def __post_init__(self):
        validate_model(self.keywords, self.counts)

    @property
    def k(self) -> int:
        return len(self.keywords)

    @property
    def model_id(self) -> str:
        payload = json.dumps([list(self.keywords), list(self.counts)], separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()[:12]


def _is_token(kw) -> bool:
    return type(kw) is str and kw.isalnum() and kw == kw.casefold()


def validate_model(keywords, counts, k=None) -> None:
    if len(keywords) != len(counts):
        raise ModelValidationError(
            "length mismatch", f"{len(keywords)} keywords but {len(counts)} counts"
        )
    if k is not None and k != len(keywords):
        raise ModelValidationError("length mismatch", f"k={k} but {len(keywords)} keywords")
    if not keywords:
        raise ModelValidationError("empty model", "at least one keyword is required")
    # isalnum and casefold are per-character, so checking the concatenation
    # is equivalent to checking every keyword
    joined = "".join(keywords) if set(map(type, keywords)) == {str} else ""
    if not (all(keywords) and joined.isalnum() and joined == joined.casefold()):
        bad = next(kw for kw in keywords if not _is_token(kw))
        raise ModelValidationError("keyword not normalized", repr(bad))
    if len(set(keywords)) != len(keywords):
        raise ModelValidationError("duplicate keyword")
    if set(map(type, counts)) != {int}:
        bad = next(c for c in counts if type(c) is not int)
        raise ModelValidationError("non-integer count", repr(bad))
    if min(counts) <= 0:
        raise ModelValidationError("non-positive count", f"minimum count is {min(counts)}")
    ranks = list(zip(map(neg, counts), keywords))
    if all(map(le, ranks, islice(ranks, 1, None))):
        return
    for i in range(1, len(counts)):
        c0, c1 = counts[i - 1], counts[i]
        if c1 > c0 or (c1 == c0 and keywords[i] < keywords[i - 1]):
            raise ModelValidationError(
                "unsorted counts",
                f"{keywords[i - 1]}={c0} precedes {keywords[i]}={c1}; counts must be "
                f"non-increasing with ties in ascending keyword order",
            )


def select_top_k(
    tallies: Mapping[str, int], k: int, metadata: ModelMetadata | None = None
) -> ModelVector:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ranked = rank_tallies(tallies)
    # zero counts sort last, so the k-th entry decides sufficiency
    if len(ranked) < k or ranked[k - 1][1] <= 0:
        raise InsufficientVocabularyError(k, sum(1 for _, c in ranked if c > 0))
    keywords, counts = zip(*ranked[:k])
    return ModelVector(keywords, counts, metadata or ModelMetadata())


def build_model(
    candidates: CandidateSet,
    train: LabeledCorpus,
    k: int = DEFAULT_K,
    match_mode: str = "exact",
    built_at: str | None = None,
) -> ModelVector:
    """Tally candidates over ``train`` and keep the top ``k``."""
    tallies = tally_candidates(candidates, train, match_mode)
    if built_at is None:
        built_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
    meta = ModelMetadata(
        train_docs=sum(1 for d in train if d.label == 1),
        candidates_file=candidates.source,
        built_at=built_at,
    )
    return select_top_k(tallies, k, meta)


def model_to_dict(model: ModelVector) -> dict:
    return {
        "k": model.k,
        "keywords": list(model.keywords),
        "counts": list(model.counts),
        "metadata": {
            "train_docs": model.metadata.train_docs,
            "candidates_file": model.metadata.candidates_file,
            "built_at": model.metadata.built_at,
        },
    }


def model_from_dict(obj) -> ModelVector:
    if not isinstance(obj, dict):
        raise ModelValidationError("schema", "top level must be a JSON object")
    for key in ("k", "keywords", "counts", "metadata"):
        if key not in obj:
            raise ModelValidationError("schema", f"missing field {key!r}")
    keywords, counts, meta = obj["keywords"], obj["counts"], obj["metadata"]
    if not isinstance(keywords, list) or not isinstance(counts, list):
        raise ModelValidationError("schema", "keywords and counts must be lists")
    if not isinstance(meta, dict):
        raise ModelValidationError("schema", "metadata must be an object")
    validate_model(keywords, counts, obj["k"])
    try:
        metadata = ModelMetadata(
            train_docs=int(meta.get("train_docs", 0)),
            candidates_file=str(meta.get("candidates_file", "")),
            built_at=str(meta.get("built_at", "")),
        )
    except (TypeError, ValueError) as exc:
        raise ModelValidationError("schema", f"bad metadata: {exc}") from exc
    return ModelVector(tuple(keywords), tuple(counts), metadata)


def save_model(model: ModelVector, path: str | Path) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model), indent=2) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> ModelVector:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"model file not found: {path}")
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ModelValidationError("schema", f"not valid JSON: {exc}") from exc
    return model_from_dict(obj)
