"""Text normalization and token counting."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

# [^\W_] is exactly str.isalnum() under Python's Unicode regex semantics
_TOKEN_RE = re.compile(r"[^\W_]+")

MATCH_MODES = ("exact", "prefix")


def normalize(text: str) -> list[str]:
    """Split ``text`` into case-folded alphanumeric runs, in text order.

    Every non-alphanumeric character (punctuation, whitespace, underscore,
    combining marks) acts as a separator.

    >>> normalize("Breach of Contract, breach!")
    ['breach', 'of', 'contract', 'breach']
    >>> normalize("MOU-2021 signed")
    ['mou', '2021', 'signed']
    """
    # fold first so that folding cannot reintroduce separators inside a token
    return _TOKEN_RE.findall(text.casefold())


@dataclass(frozen=True)
class TokenCounts:
    counts: Mapping[str, int] = field(default_factory=dict)
    total: int = 0

    def __getitem__(self, token: str) -> int:
        return self.counts.get(token, 0)

    def __len__(self) -> int:
        return len(self.counts)

    def match(self, keyword: str, mode: str = "exact") -> int:
        """Occurrences of ``keyword`` under the given match mode.

        In ``prefix`` mode every token starting with ``keyword`` counts.
        """
        if mode == "exact":
            return self.counts.get(keyword, 0)
        if mode == "prefix":
            return sum(n for tok, n in self.counts.items() if tok.startswith(keyword))
        raise ValueError(f"unknown match mode {mode!r}; expected one of {MATCH_MODES}")


def count_tokens(tokens: Iterable[str]) -> TokenCounts:
    counter = Counter(tokens)
    return TokenCounts(counts=dict(counter), total=sum(counter.values()))


def count_text(text: str) -> TokenCounts:
    return count_tokens(normalize(text))
