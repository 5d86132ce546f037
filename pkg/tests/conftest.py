import re
from collections import defaultdict
from pathlib import Path

import numpy as np
import pytest

from fuzzyskew.assetfile import load_assets

DATA = Path(__file__).resolve().parent.parent / "data"

CRITERIA = {
    1: "Example 1 panel",
    2: "Example 2 panel",
    3: "Example 3 stress panel",
    4: "Table 1 allocations",
    5: "timing ordering",
    6: "property suites",
    7: "Beta quantile inversion",
}

_outcomes = defaultdict(list)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def example1():
    return load_assets(DATA / "example1.json")[0].fuzzy


@pytest.fixture(scope="session")
def example2():
    return load_assets(DATA / "example2.json")[0].fuzzy


@pytest.fixture(scope="session")
def example3():
    return load_assets(DATA / "example3.json")[0].fuzzy


@pytest.fixture(scope="session")
def portfolio1():
    return [a.fuzzy for a in load_assets(DATA / "portfolio1.json")]


@pytest.fixture(scope="session")
def portfolio2():
    return [a.fuzzy for a in load_assets(DATA / "portfolio2.json")]


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)[a-z]?_", report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[int(m.group(1))].append((report.nodeid.split("::", 1)[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(CRITERIA):
        results = _outcomes.get(num)
        if not results:
            continue
        failed = [name for name, outcome in results if outcome != "passed"]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {num} ({CRITERIA[num]}): {status} [{len(results) - len(failed)}/{len(results)}]"
        if failed:
            line += " failing: " + ", ".join(failed)
        tr.write_line(line)
