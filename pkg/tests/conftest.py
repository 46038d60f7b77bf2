import time

import pytest

SUITE_BUDGET_SECONDS = 120.0
_criteria: dict[str, tuple[str, str]] = {}
_started = time.monotonic()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if not item.name.startswith("test_criterion_"):
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria[item.name] = ("PASS" if rep.passed else "FAIL", doc)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for name in sorted(_criteria):
        status, doc = _criteria[name]
        tr.write_line(f"{status}  {name[len('test_criterion_'):]}: {doc}")
    elapsed = time.monotonic() - _started
    status = "PASS" if elapsed < SUITE_BUDGET_SECONDS else "FAIL"
    tr.write_line(f"{status}  10 (runtime): session took {elapsed:.1f}s, budget {SUITE_BUDGET_SECONDS:.0f}s")


def pytest_sessionfinish(session, exitstatus):
    # criterion 10 also bounds the wall time of the whole suite
    if _criteria and time.monotonic() - _started >= SUITE_BUDGET_SECONDS and exitstatus == 0:
        session.exitstatus = 1
