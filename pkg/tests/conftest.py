"""Shared test plumbing.

The acceptance tests register one PASS/FAIL line each; those lines are
echoed in the terminal summary so a plain pytest run always shows the
verdict per criterion, whether or not the suite as a whole is green.
"""

import time

_RESULTS: list[tuple[str, bool, str]] = []


class criterion:
    """Context manager that records one acceptance-criterion verdict.

    Set ``self.ok`` (and optionally ``self.detail``) inside the block, then
    assert it.  An exception or a False ok records FAIL; the line is
    registered either way, before the assertion propagates.
    """

    def __init__(self, label: str, description: str):
        self.label = label
        self.description = description
        self.ok = False
        self.detail = ""
        self._start = 0.0
        self.elapsed = 0.0

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.elapsed = time.perf_counter() - self._start
        ok = self.ok and exc_type is None
        detail = self.detail
        if exc_type is not None and not detail:
            detail = f"{exc_type.__name__}: {exc}"
        suffix = f" ({detail})" if detail else ""
        _RESULTS.append((self.label, ok,
                         f"{self.description}{suffix} [{self.elapsed:.2f}s]"))
        return False


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, text in _RESULTS:
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{label}: {verdict} - {text}")
