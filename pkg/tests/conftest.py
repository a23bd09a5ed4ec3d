import re

import pytest

import flagcalc

_criteria: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    prev = _criteria.get(n, ("", True))
    _criteria[n] = (prev[0], prev[1] and report.passed)


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            n, text = mark.args
            _criteria.setdefault(n, (text, True))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        text, ok = _criteria[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}")


@pytest.fixture
def A1():
    return flagcalc.root_system("A1")


@pytest.fixture
def A2():
    return flagcalc.root_system("A2")


@pytest.fixture
def A3():
    return flagcalc.root_system("A3")


@pytest.fixture
def B2():
    return flagcalc.root_system("B2")


@pytest.fixture
def G2():
    return flagcalc.root_system("G2")
