"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""
import pytest

_criteria: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        number, title = marker.args
        entry = _criteria.setdefault(number, {"title": title, "failed": [], "ran": 0})
        entry["ran"] += 1
        if not report.passed:
            entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"criterion {number}: {status}  {entry['title']} ({entry['ran']} checks)"
        if entry["failed"]:
            line += f"  failing: {', '.join(entry['failed'])}"
        terminalreporter.write_line(line)
