"""Loading labeled plain-text corpora from disk and splitting them."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path, PurePosixPath
from typing import Iterator, Optional, Sequence

from ._prng import SplitMix64
from .errors import CorpusError

POSITIVE_DIR = "positive"
OTHERS_DIR = "others"
LABELS = (0, 1)


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    label: Optional[int] = None


@dataclass(frozen=True)
class LabeledCorpus:
    documents: tuple[Document, ...]

    def __post_init__(self):
        seen = set()
        for doc in self.documents:
            if doc.id in seen:
                raise CorpusError(f"duplicate document id {doc.id!r}")
            seen.add(doc.id)
            if doc.label not in LABELS:
                raise CorpusError(f"document {doc.id!r} has label {doc.label!r}; expected 0 or 1")

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    @property
    def ids(self) -> list[str]:
        return [d.id for d in self.documents]

    @property
    def labels(self) -> list[int]:
        return [d.label for d in self.documents]

    def with_label(self, label: int) -> "LabeledCorpus":
        return LabeledCorpus(tuple(d for d in self.documents if d.label == label))


def _read_text(path: Path, doc_id: str) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise CorpusError(f"cannot read {doc_id!r}: file not found") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise CorpusError(f"cannot read {doc_id!r}: {exc}") from exc


def _read_manifest(root: Path, manifest: Path) -> list[tuple[str, int]]:
    entries = []
    with open(manifest, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["path", "label"]:
            raise CorpusError(f"manifest {manifest} must have header 'path,label'")
        for lineno, row in enumerate(reader, start=2):
            rel, label = row["path"].strip(), row["label"].strip()
            if label not in ("0", "1"):
                raise CorpusError(f"manifest {manifest}:{lineno}: label must be 0 or 1, got {label!r}")
            entries.append((PurePosixPath(rel).as_posix(), int(label)))
    return entries


def load_corpus(root: str | Path, manifest: str | Path | None = None) -> LabeledCorpus:
    """Load a labeled corpus.

    Without a manifest, ``root/positive/*.txt`` are class 1 and
    ``root/others/*.txt`` class 0. With a manifest (CSV ``path,label``,
    paths relative to ``root``) the listed files are used instead. Document
    ids are root-relative POSIX paths; documents are ordered by id.
    """
    root = Path(root)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus root not found: {root}")

    if manifest is not None:
        manifest = Path(manifest)
        if not manifest.is_file():
            raise FileNotFoundError(f"manifest not found: {manifest}")
        entries = _read_manifest(root, manifest)
    else:
        entries = []
        for sub, label in ((POSITIVE_DIR, 1), (OTHERS_DIR, 0)):
            d = root / sub
            if d.is_dir():
                entries.extend(
                    (p.relative_to(root).as_posix(), label)
                    for p in d.glob("*.txt")
                    if p.is_file()
                )

    if not entries:
        raise CorpusError(f"empty corpus: no .txt documents under {root}")

    entries.sort(key=lambda e: e[0])
    docs = tuple(
        Document(id=rel, text=_read_text(root / rel, rel), label=label)
        for rel, label in entries
    )
    return LabeledCorpus(docs)


def split_corpus(
    corpus: LabeledCorpus, train_count: int, seed: int
) -> tuple[LabeledCorpus, LabeledCorpus]:
    """Seeded split of the class-1 documents into train and test.

    Class-1 ids are shuffled with SplitMix64(seed) and the first
    ``train_count`` go to train. All class-0 documents go to test. Both
    halves keep the corpus' id order.
    """
    positives = [d.id for d in corpus if d.label == 1]
    if not 0 < train_count < len(positives):
        raise CorpusError(
            f"train_count must satisfy 0 < train_count < {len(positives)} "
            f"(number of class-1 documents), got {train_count}"
        )
    SplitMix64(seed).shuffle(positives)
    train_ids = set(positives[:train_count])
    train = tuple(d for d in corpus if d.id in train_ids)
    test = tuple(d for d in corpus if d.id not in train_ids)
    return LabeledCorpus(train), LabeledCorpus(test)


def write_corpus(corpus: LabeledCorpus | Sequence[Document], root: str | Path) -> None:
    """Write documents under ``root`` at their id paths (inverse of load_corpus)."""
    root = Path(root)
    for doc in corpus:
        path = root / doc.id
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(doc.text, encoding="utf-8", newline="")
