"""Keyword-frequency document classification.

A curated candidate keyword list is tallied over positive-class training
documents; the top-K keywords and their totals form the corpus vector, and a
document is labeled positive when the cosine similarity between its keyword
counts and the corpus vector reaches a threshold.
"""

from .classify import Decision, DocVector, classify, cosine_similarity, doc_vector
from .corpusgen import GenSpec, generate
from .errors import (
    CandidateError,
    CorpusError,
    GenSpecError,
    InsufficientVocabularyError,
    KwClassifyError,
    ModelValidationError,
)
from .evaluation import ConfusionMatrix, MetricsRow, confusion, emit_report, metrics, sweep
from .ingest import Document, LabeledCorpus, load_corpus, split_corpus
from .tokens import TokenCounts, count_tokens, normalize
from .vocab import (
    CandidateSet,
    ModelVector,
    build_model,
    load_candidates,
    load_model,
    save_model,
    select_top_k,
    tally_candidates,
)

__version__ = "0.1.0"
