"""Shared pytest plumbing.

Aggregates the acceptance tests (named test_criterion_NN_*) into one
PASS/FAIL line per criterion in the terminal summary, so the acceptance
status is readable at a glance regardless of how many asserts back each
criterion.
"""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)")
_verdicts = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    if report.when == "call":
        ok = report.passed
    elif report.failed:
        ok = False
    else:
        return
    _verdicts[num] = _verdicts.get(num, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_verdicts):
        verdict = "PASS" if _verdicts[num] else "FAIL"
        terminalreporter.write_line(f"criterion {num:02d}: {verdict}")
