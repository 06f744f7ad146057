import time

import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Track one acceptance criterion; outcome and wall time are listed in
    the terminal summary.  Tests may set ``criterion["budget"]`` in seconds."""
    entry = {"name": request.node.name, "budget": None, "status": "FAIL"}
    start = time.perf_counter()
    yield entry
    entry["elapsed"] = time.perf_counter() - start
    _ACCEPTANCE.append(entry)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and "criterion" in getattr(item, "funcargs", {}):
        item.funcargs["criterion"]["status"] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _ACCEPTANCE:
        budget = f" / budget {entry['budget']:g} s" if entry["budget"] else ""
        terminalreporter.write_line(
            f"{entry['status']}  {entry['name']}  ({entry['elapsed']:.2f} s{budget})")
