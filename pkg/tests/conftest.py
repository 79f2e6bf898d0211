from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import pytest

from inventio import ArgumentGraph, Audience
from inventio.model import PremiseKind

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "inventio" / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def build_cisg() -> tuple[ArgumentGraph, Audience]:
    g = ArgumentGraph()
    g.add_statement("CISG applies", id="c")
    g.add_statement("CISG does not apply", id="not_c")
    g.link_complement("c", "not_c")
    g.add_statement("places of business in different states", id="s1")
    g.add_statement("buyer in England, which has not signed", id="s2")
    g.add_statement("England announced it will sign", id="s3")
    g.add_statement("buyer not in a contracting state", id="s4")
    g.add_argument("c", "pro", [("s1", PremiseKind.ORDINARY)], 0.4, id="a1")
    g.add_argument("c", "con", [("s4", PremiseKind.ORDINARY)], 0.8, id="a2")
    g.add_argument("s4", "pro", [("s2", PremiseKind.ORDINARY)], 0.7, id="a3")
    g.add_argument("s4", "con", [("s3", PremiseKind.ORDINARY)], 0.2, id="a4")
    return g.freeze(), Audience(frozenset({"s1", "s2", "s3"}))


@pytest.fixture
def cisg():
    return build_cisg()


# -- one pass/fail line per acceptance criterion --------------------------------

_criteria: dict[int, dict] = defaultdict(lambda: {"text": "", "outcomes": []})


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = _markers.get(report.nodeid)
    if marker is None:
        return
    n, text = marker
    entry = _criteria[n]
    entry["text"] = text
    entry["outcomes"].append(report.passed)


_markers: dict[str, tuple[int, str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _markers[item.nodeid] = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        entry = _criteria[n]
        ok = entry["outcomes"] and all(entry["outcomes"])
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {entry['text']}")
