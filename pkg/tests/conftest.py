from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from xmono.ordered import OrderedGraph, parse_ograph

DATA = Path(__file__).parent / "data"

NO_WITNESS8_EDGES = [
    (1, 2), (2, 3), (3, 4), (4, 7), (7, 8), (2, 5), (5, 6), (6, 7),
    (2, 7), (1, 5), (5, 7), (2, 4), (4, 8), (1, 7), (2, 8),
]


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def no_witness8() -> OrderedGraph:
    return parse_ograph((DATA / "no_witness8.ograph").read_text())


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


def complete(n: int, orders=None) -> OrderedGraph:
    return OrderedGraph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)], orders)


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance.append((name, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{outcome}  {name}")
