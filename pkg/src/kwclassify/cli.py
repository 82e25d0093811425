"""kwclassify command line interface.

Machine-readable results go to stdout as TSV (reports to files as CSV/JSON);
diagnostics go to stderr.

Exit status: 0 success, 2 input not found, 3 insufficient vocabulary,
4 model validation failure, 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional, Sequence

from .classify import DEFAULT_THRESHOLD, classify
from .corpusgen import generate, load_spec
from .errors import InsufficientVocabularyError, KwClassifyError, ModelValidationError
from .evaluation import REPORT_COLUMNS, emit_report, format_row, sweep
from .ingest import Document, LabeledCorpus, load_corpus, split_corpus, write_corpus
from .tokens import MATCH_MODES
from .vocab import DEFAULT_K, build_model, load_candidates, load_model, rank_tallies, save_model, tally_candidates

log = logging.getLogger("kwclassify")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_FOUND = 2
EXIT_VOCABULARY = 3
EXIT_MODEL = 4

DEFAULT_THRESHOLDS = "0.6:0.9:0.05"


@dataclass
class RunConfig:
    k: int = DEFAULT_K
    threshold: float = DEFAULT_THRESHOLD
    thresholds: str = DEFAULT_THRESHOLDS
    match_mode: str = "exact"
    corpus: Optional[str] = None
    manifest: Optional[str] = None
    candidates: Optional[str] = None
    model: Optional[str] = None
    report: Optional[str] = None
    format: Optional[str] = None
    seed: int = 0
    train_count: Optional[int] = None

    def validate(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold must lie in [0, 1], got {self.threshold}")
        if self.match_mode not in MATCH_MODES:
            raise ValueError(f"match_mode must be one of {MATCH_MODES}, got {self.match_mode!r}")
        if self.format not in (None, "csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")


def parse_thresholds(spec: str) -> list[float]:
    """Parse ``start:stop:step`` (stop inclusive within 1e-9) or ``a,b,c``."""
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"threshold grid must be start:stop:step, got {spec!r}")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise ValueError(f"threshold step must be positive, got {step}")
        n = int((stop - start) / step + 1e-9)
        values = [round(start + i * step, 10) for i in range(n + 1)]
        return [v for v in values if v <= stop + 1e-9]
    return [float(p) for p in spec.split(",") if p.strip()]


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Flag > config file > default."""
    cfg = RunConfig()
    if getattr(args, "config", None):
        path = Path(args.config)
        if not path.is_file():
            raise FileNotFoundError(f"config file not found: {path}")
        data = json.loads(path.read_text(encoding="utf-8"))
        known = {f.name for f in fields(RunConfig)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"unknown config field(s): {', '.join(unknown)}")
        cfg = replace(cfg, **data)
    overrides = {
        f.name: getattr(args, f.name)
        for f in fields(RunConfig)
        if getattr(args, f.name, None) is not None
    }
    cfg = replace(cfg, **overrides)
    cfg.validate()
    return cfg


def _require(value, flag: str):
    if value is None:
        raise ValueError(f"{flag} is required")
    return value


def _corpus_parts(cfg: RunConfig) -> tuple[LabeledCorpus, LabeledCorpus]:
    """(train, test) views of the configured corpus.

    With ``--train-count`` the class-1 documents are split; otherwise the
    whole corpus serves as both.
    """
    corpus = load_corpus(_require(cfg.corpus, "--corpus"), cfg.manifest)
    if cfg.train_count is None:
        return corpus, corpus
    return split_corpus(corpus, cfg.train_count, cfg.seed)


def _report_format(cfg: RunConfig) -> str:
    if cfg.format:
        return cfg.format
    if cfg.report and cfg.report.lower().endswith(".json"):
        return "json"
    return "csv"


def _print_rows(rows, out) -> None:
    print("\t".join(REPORT_COLUMNS), file=out)
    for row in rows:
        print("\t".join(format_row(row)), file=out)


def cmd_candidates(cfg: RunConfig, out) -> int:
    candidates = load_candidates(_require(cfg.candidates, "--candidates"))
    train, _ = _corpus_parts(cfg)
    for kw, count in rank_tallies(tally_candidates(candidates, train, cfg.match_mode)):
        print(f"{kw}\t{count}", file=out)
    return EXIT_OK


def cmd_build(cfg: RunConfig, out) -> int:
    candidates = load_candidates(_require(cfg.candidates, "--candidates"))
    model_path = _require(cfg.model, "--model")
    train, _ = _corpus_parts(cfg)
    model = build_model(candidates, train, cfg.k, cfg.match_mode)
    save_model(model, model_path)
    for kw, count in zip(model.keywords, model.counts):
        print(f"{kw}\t{count}", file=out)
    log.info("wrote %d-keyword model to %s", model.k, model_path)
    return EXIT_OK


def cmd_classify(cfg: RunConfig, docs: Sequence[str], out) -> int:
    model = load_model(_require(cfg.model, "--model"))
    for doc_path in docs:
        path = Path(doc_path)
        if not path.is_file():
            raise FileNotFoundError(f"document not found: {path}")
        doc = Document(id=doc_path, text=path.read_text(encoding="utf-8"))
        decision = classify(model, doc, cfg.threshold, cfg.match_mode)
        print(f"{doc.id}\t{decision.similarity:.6f}\t{decision.label}", file=out)
    return EXIT_OK


def _run_sweep(cfg: RunConfig, thresholds: list[float], out) -> int:
    model = load_model(_require(cfg.model, "--model"))
    _, test = _corpus_parts(cfg)
    rows = sweep(model, test, thresholds, cfg.match_mode)
    if cfg.report:
        emit_report(rows, cfg.report, _report_format(cfg))
        log.info("wrote %d-row report to %s", len(rows), cfg.report)
    _print_rows(rows, out)
    return EXIT_OK


def cmd_evaluate(cfg: RunConfig, out) -> int:
    return _run_sweep(cfg, [cfg.threshold], out)


def cmd_sweep(cfg: RunConfig, out) -> int:
    return _run_sweep(cfg, parse_thresholds(cfg.thresholds), out)


def cmd_gen(spec_file: str, out_root: str, seed: Optional[int], out) -> int:
    spec = load_spec(spec_file)
    if seed is not None:
        spec = replace(spec, seed=seed)
    corpus = generate(spec)
    write_corpus(corpus, out_root)
    n_pos = sum(corpus.labels)
    print(f"{out_root}\t{n_pos}\t{len(corpus) - n_pos}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kwclassify",
        description="Keyword-frequency document classifier.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, corpus=False, candidates=False, model=False, split=False, report=False):
        p.add_argument("--config", help="JSON file of RunConfig defaults")
        p.add_argument("--match-mode", dest="match_mode", choices=MATCH_MODES,
                       help="keyword matching: exact token or token prefix (default exact)")
        if corpus:
            p.add_argument("--corpus", help="corpus root (positive/ and others/ subdirectories)")
            p.add_argument("--manifest", help="CSV manifest with path,label rows")
        if candidates:
            p.add_argument("--candidates", help="candidate keyword file")
        if model:
            p.add_argument("--model", help="model JSON file")
        if split:
            p.add_argument("--train-count", dest="train_count", type=int,
                           help="split the corpus: this many class-1 docs train, the rest test")
            p.add_argument("--seed", type=int, help="split seed (default 0)")
        if report:
            p.add_argument("--report", help="write report to this path")
            p.add_argument("--format", choices=("csv", "json"),
                           help="report format (default: from extension, else csv)")

    p = sub.add_parser("candidates", help="print the candidate tally sorted by count")
    common(p, corpus=True, candidates=True, split=True)

    p = sub.add_parser("build", help="build the top-K model file")
    common(p, corpus=True, candidates=True, model=True, split=True)
    p.add_argument("--k", type=int, help=f"number of keywords (default {DEFAULT_K})")

    p = sub.add_parser("classify", help="classify documents against a model")
    common(p, model=True)
    p.add_argument("--threshold", type=float, help=f"decision threshold (default {DEFAULT_THRESHOLD})")
    p.add_argument("docs", nargs="+", help="plain-text documents")

    p = sub.add_parser("evaluate", help="evaluate a model at one threshold")
    common(p, corpus=True, model=True, split=True, report=True)
    p.add_argument("--threshold", type=float, help=f"decision threshold (default {DEFAULT_THRESHOLD})")

    p = sub.add_parser("sweep", help="evaluate a model over a threshold grid")
    common(p, corpus=True, model=True, split=True, report=True)
    p.add_argument("--thresholds",
                   help=f"start:stop:step or comma list (default {DEFAULT_THRESHOLDS})")

    p = sub.add_parser("gen", help="write a synthetic labeled corpus")
    p.add_argument("spec", help="generator spec JSON")
    p.add_argument("out_root", help="output corpus root")
    p.add_argument("--seed", type=int, help="override the spec's seed")
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        if args.command == "gen":
            return cmd_gen(args.spec, args.out_root, args.seed, out)
        cfg = resolve_config(args)
        if args.command == "candidates":
            return cmd_candidates(cfg, out)
        if args.command == "build":
            return cmd_build(cfg, out)
        if args.command == "classify":
            return cmd_classify(cfg, args.docs, out)
        if args.command == "evaluate":
            return cmd_evaluate(cfg, out)
        return cmd_sweep(cfg, out)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except InsufficientVocabularyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VOCABULARY
    except ModelValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except (KwClassifyError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
