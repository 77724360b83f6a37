from __future__ import annotations

from contextlib import contextmanager
from pathlib import Path

import pytest

from nichols import parse

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name: str):
    return parse((DATA / f"{name}.braid").read_text())


@pytest.fixture
def data_dir() -> Path:
    return DATA


_ACCEPTANCE: list[str] = []


@contextmanager
def _record(number: int, text: str):
    try:
        yield
    except BaseException as exc:
        line = f"FAIL criterion {number}: {text} ({type(exc).__name__}: {exc})"
        _ACCEPTANCE.append(line)
        print(line)
        raise
    line = f"PASS criterion {number}: {text}"
    _ACCEPTANCE.append(line)
    print(line)


@pytest.fixture
def criterion():
    """Context manager printing one pass/fail line per acceptance criterion."""
    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
