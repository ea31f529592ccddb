import random

import pytest

from milnor import LinkingMatrix, TRIVIAL_FIVE


def random_linking_matrix(rng, n, lo=-5, hi=5):
    return LinkingMatrix.from_upper(n, [rng.randint(lo, hi) for _ in range(n * (n - 1) // 2)])


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def trivial_five():
    return TRIVIAL_FIVE


# --- acceptance reporting: one pass/fail line per criterion -------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    key = marker.args[0]
    prev = _criteria.get(key, (marker.args[1], True))
    ok = prev[1] and not rep.failed
    _criteria[key] = (marker.args[1], ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        text, ok = _criteria[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key:>2}: {text}")
