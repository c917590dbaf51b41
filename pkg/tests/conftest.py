from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sylprob.builders import build_expression  # noqa: E402

_CRITERIA: dict[str, str] = {}


def pytest_addoption(parser):
    parser.addoption("--include-stretch", action="store_true", default=False,
                     help="run the Sp(6,2) stretch-scale checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--include-stretch"):
        return
    skip = pytest.mark.skip(reason="stretch-scale; pass --include-stretch to run")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIPPED"}[report.outcome]
        if report.when == "setup" and report.outcome == "skipped":
            status = "SKIPPED"
        _CRITERIA[name] = status


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        number = int(name.split("_")[2])
        terminalreporter.write_line(f"criterion {number:2d} [{name}]: {_CRITERIA[name]}")


_GROUPS: dict[str, object] = {}


@pytest.fixture(scope="session")
def group():
    """Session-wide cache of built groups keyed by expression text."""
    def get(expr: str):
        if expr not in _GROUPS:
            _GROUPS[expr] = build_expression(expr)
        return _GROUPS[expr]
    return get
