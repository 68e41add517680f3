import time

import pytest

_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Time a criterion and record a pass/fail line for the terminal summary."""
    marker = request.node.get_closest_marker("criterion")
    label = marker.args[0] if marker else request.node.name
    start = time.perf_counter()
    entry = {"label": label, "name": request.node.name}
    _CRITERIA.append(entry)
    yield entry
    entry["elapsed"] = time.perf_counter() - start


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        for entry in _CRITERIA:
            if entry["name"] == item.name:
                entry["passed"] = rep.passed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for e in _CRITERIA:
        verdict = "PASS" if e.get("passed") else "FAIL"
        elapsed = e.get("elapsed", 0.0)
        terminalreporter.write_line(f"{verdict}  {e['label']:<48} {elapsed:8.2f}s")
