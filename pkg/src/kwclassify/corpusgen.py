"""Deterministic synthetic labeled corpora.

Each document is a space-joined token stream. Every token is drawn, with
probability equal to the class keyword rate, uniformly from the class keyword
pool; otherwise uniformly from a fixed filler vocabulary of common English
words. All randomness comes from one SplitMix64 stream seeded by
``GenSpec.seed``, consumed positives first, then negatives, so output is
bit-identical across platforms.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ._prng import SplitMix64
from .errors import GenSpecError
from .ingest import OTHERS_DIR, POSITIVE_DIR, Document, LabeledCorpus
from .tokens import normalize

# twenty curated contract-breach keywords, plus ten more
DEFAULT_POSITIVE_POOL = (
    "breach", "contract", "owe", "sum", "cost", "agreement", "pay", "mou",
    "rent", "dispute", "amount", "damage", "obligation", "liability",
    "document", "differential", "material", "approval", "loss", "offer",
    "invoice", "deposit", "clause", "tenancy", "lease", "indemnity",
    "repayment", "default", "termination", "settlement",
)
# criminal-law vocabulary; "document" and "loss" overlap the positive pool
DEFAULT_NEGATIVE_POOL = (
    "accused", "prosecution", "offence", "sentence", "conviction",
    "imprisonment", "charge", "victim", "police", "criminal", "penal",
    "trafficking", "theft", "assault", "custody", "bail", "plea", "witness",
    "document", "loss",
)


@lru_cache(maxsize=1)
def filler_vocabulary() -> tuple[str, ...]:
    text = resources.files("kwclassify").joinpath("data/filler_words.txt").read_text("utf-8")
    return tuple(w for w in text.split() if w)


@dataclass(frozen=True)
class GenSpec:
    seed: int = 7
    n_pos: int = 250
    n_neg: int = 50
    vocab_pos: tuple[str, ...] = DEFAULT_POSITIVE_POOL
    vocab_neg: tuple[str, ...] = DEFAULT_NEGATIVE_POOL
    doc_len_range: tuple[int, int] = (200, 2000)
    pos_keyword_rate: float = 0.3
    neg_keyword_rate: float = 0.05

    def validate(self) -> None:
        for name in ("seed", "n_pos", "n_neg"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise GenSpecError(name, f"must be an integer, got {v!r}")
        if self.n_pos < 0 or self.n_neg < 0:
            raise GenSpecError("n_pos" if self.n_pos < 0 else "n_neg", "must be >= 0")
        if self.n_pos + self.n_neg == 0:
            raise GenSpecError("n_pos", "at least one document must be generated")
        if len(self.doc_len_range) != 2:
            raise GenSpecError("doc_len_range", "must be a [min, max] pair")
        lo, hi = self.doc_len_range
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (lo, hi)):
            raise GenSpecError("doc_len_range", "bounds must be integers")
        if lo < 0 or lo > hi:
            raise GenSpecError("doc_len_range", f"need 0 <= min <= max, got {lo}, {hi}")
        for name in ("pos_keyword_rate", "neg_keyword_rate"):
            r = getattr(self, name)
            if not isinstance(r, (int, float)) or isinstance(r, bool) or not 0.0 <= r <= 1.0:
                raise GenSpecError(name, f"must be a real in [0, 1], got {r!r}")
        filler = set(filler_vocabulary())
        for name in ("vocab_pos", "vocab_neg"):
            pool = getattr(self, name)
            if not pool:
                raise GenSpecError(name, "keyword pool must be non-empty")
            for w in pool:
                if not isinstance(w, str) or normalize(w) != [w]:
                    raise GenSpecError(name, f"{w!r} is not a normalized single token")
            clash = sorted(set(pool) & filler)
            if clash:
                raise GenSpecError(name, f"overlaps the filler vocabulary: {', '.join(clash)}")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["vocab_pos"] = list(self.vocab_pos)
        d["vocab_neg"] = list(self.vocab_neg)
        d["doc_len_range"] = list(self.doc_len_range)
        return d

    @classmethod
    def from_dict(cls, obj: dict) -> "GenSpec":
        if not isinstance(obj, dict):
            raise GenSpecError("<root>", "spec must be a JSON object")
        known = set(cls.__dataclass_fields__)
        unknown = sorted(set(obj) - known)
        if unknown:
            raise GenSpecError(unknown[0], "unknown field")
        kwargs = dict(obj)
        for name in ("vocab_pos", "vocab_neg", "doc_len_range"):
            if name in kwargs:
                if not isinstance(kwargs[name], (list, tuple)):
                    raise GenSpecError(name, "must be a list")
                kwargs[name] = tuple(kwargs[name])
        spec = cls(**kwargs)
        spec.validate()
        return spec


def load_spec(path: str | Path) -> GenSpec:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"generator spec not found: {path}")
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GenSpecError("<root>", f"not valid JSON: {exc}") from exc
    return GenSpec.from_dict(obj)


def _document(rng: SplitMix64, spec: GenSpec, pool: tuple[str, ...], rate: float) -> str:
    filler = filler_vocabulary()
    n = rng.randint(*spec.doc_len_range)
    tokens = []
    for _ in range(n):
        source = pool if rng.random() < rate else filler
        tokens.append(source[rng.below(len(source))])
    return " ".join(tokens)


def generate(spec: GenSpec) -> LabeledCorpus:
    spec.validate()
    rng = SplitMix64(spec.seed)
    width = max(4, len(str(max(spec.n_pos, spec.n_neg))))
    docs = []
    for i in range(spec.n_pos):
        text = _document(rng, spec, spec.vocab_pos, spec.pos_keyword_rate)
        docs.append(Document(f"{POSITIVE_DIR}/pos_{i:0{width}d}.txt", text, 1))
    for i in range(spec.n_neg):
        text = _document(rng, spec, spec.vocab_neg, spec.neg_keyword_rate)
        docs.append(Document(f"{OTHERS_DIR}/neg_{i:0{width}d}.txt", text, 0))
    docs.sort(key=lambda d: d.id)
    return LabeledCorpus(tuple(docs))
