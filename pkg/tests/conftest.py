import re

import pytest

from cantorlist.catalog import build_catalog

_CRITERIA = {}


@pytest.fixture(scope="session")
def catalog7():
    return build_catalog(7)


@pytest.fixture(scope="session")
def catalog9():
    return build_catalog(9, jobs=2)


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    label = m.group(2).replace("_", " ")
    prev = _CRITERIA.get(num, (label, "PASS"))
    if report.failed:
        _CRITERIA[num] = (label, "FAIL")
    elif report.when == "call" and report.skipped:
        _CRITERIA[num] = (label, "SKIP")
    elif report.when == "call":
        _CRITERIA[num] = prev


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        label, status = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num}: {status}  ({label})")
