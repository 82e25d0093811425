import contextlib
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

_CRITERIA: list[tuple[str, str, bool]] = []


@contextlib.contextmanager
def _record(number: str, title: str):
    try:
        yield
    except BaseException:
        _CRITERIA.append((number, title, False))
        print(f"[FAIL] criterion {number}: {title}")
        raise
    _CRITERIA.append((number, title, True))
    print(f"[PASS] criterion {number}: {title}")


@pytest.fixture
def criterion():
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(_CRITERIA, key=lambda c: int(c[0])):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")


def write_tree(root: Path, files: dict[str, str]) -> Path:
    for rel, text in files.items():
        p = root / rel
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text, encoding="utf-8")
    return root


@pytest.fixture
def toy_root(tmp_path):
    return write_tree(
        tmp_path / "corpus",
        {
            "positive/a.txt": "Breach of contract; the sum owed. Breach!",
            "positive/b.txt": "breach breach owe rent",
            "positive/c.txt": "rent dispute over the MOU-2021 agreement",
            "others/x.txt": "The accused was charged with theft.",
            "others/y.txt": "sentence reduced on appeal",
        },
    )


@pytest.fixture
def toy_candidates(tmp_path):
    p = tmp_path / "candidates.txt"
    p.write_text("# contract terms\nBreach\nRent\n\nOwe\n", encoding="utf-8")
    return p
