from __future__ import annotations

import re

from hypothesis import settings

settings.register_profile("quartica", max_examples=100, derandomize=True, deadline=None)
settings.load_profile("quartica")

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion that ran."""
    lines = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            match = _CRITERION.search(getattr(rep, "nodeid", ""))
            if match and getattr(rep, "when", "call") in ("call", "setup"):
                num, name = int(match.group(1)), match.group(2)
                verdict = "PASS" if outcome == "passed" else "FAIL"
                if lines.get(num, ("PASS",))[0] == "PASS":
                    lines[num] = (verdict, name)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(lines):
        verdict, name = lines[num]
        terminalreporter.write_line(f"criterion {num}: {verdict}  ({name.replace('_', ' ')})")
