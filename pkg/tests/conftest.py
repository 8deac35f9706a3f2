import os
from pathlib import Path

import pytest

from netdim.graph import Graph

REPO = Path(__file__).resolve().parents[1]
DATA_DIR = Path(os.environ.get("NETDIM_DATA_DIR", REPO / "datasets"))


def dataset_path(name: str) -> Path:
    path = DATA_DIR / f"{name}.txt"
    if not path.is_file():
        pytest.skip(f"dataset {name} not available at {path} (see docs/datasets.md)")
    return path


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


_criteria: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::", 1)[1]
        _criteria.setdefault(name, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcomes in _criteria.items():
        status = "FAIL" if "failed" in outcomes else ("SKIP" if "skipped" in outcomes else "PASS")
        terminalreporter.write_line(f"{status:4}  {name}")
