import random

import pytest

from circprog import Arena


@pytest.fixture
def arena():
    return Arena()


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(number, description): exit criterion reported in the summary"
    )


_acceptance = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, description = marker.args
    _acceptance[number] = (description, call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        description, ok = _acceptance[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {description}")
