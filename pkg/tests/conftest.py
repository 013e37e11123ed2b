from __future__ import annotations

import csv
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def canonical(surface: str) -> str:
    """Undo the typeset space before superscripts ("8.9m ³" -> "8.9m³")."""
    return surface.replace(" ³", "³").replace(" ²", "²")


def _read_table(name: str) -> list[tuple[str, ...]]:
    with open(DATA / name, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh, delimiter="\t"))
    return [tuple(canonical(cell) for cell in row) for row in rows[1:]]


@pytest.fixture(scope="session")
def corpus_text() -> str:
    return (DATA / "earthmoving.txt").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def table2() -> set[tuple[str, str]]:
    return set(_read_table("table2.tsv"))


@pytest.fixture(scope="session")
def table3() -> set[tuple[str, str, str]]:
    return set(_read_table("table3.tsv"))


_RESULTS: list[tuple[str, bool]] = []


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; reported after the run."""
    name = request.node.get_closest_marker("criterion").args[0]
    yield
    call = getattr(request.node, "rep_call", None)
    _RESULTS.append((name, call is not None and call.passed))


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in _RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
