"""Collects outcomes of tests marked ``acceptance(n, title)`` into one line per criterion."""

import pytest

_outcomes: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when != "call" and not (rep.failed or rep.skipped):
        return
    number, title = marker.args
    entry = _outcomes.setdefault(number, {"title": title, "passed": 0, "failed": 0, "skipped": []})
    if rep.passed:
        entry["passed"] += 1
    elif rep.failed:
        entry["failed"] += 1
    else:
        reason = rep.longrepr[2] if isinstance(rep.longrepr, tuple) else str(rep.longrepr)
        entry["skipped"].append(reason.removeprefix("Skipped: "))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        e = _outcomes[number]
        if e["failed"]:
            status = "FAIL"
        elif e["passed"]:
            status = "PASS"
        else:
            status = "SKIP"
        line = f"criterion {number}: {status}  {e['title']} ({e['passed']} passed, {e['failed']} failed"
        line += f", {len(e['skipped'])} skipped)" if e["skipped"] else ")"
        terminalreporter.write_line(line)
        for reason in e["skipped"]:
            terminalreporter.write_line(f"    skipped: {reason}")
