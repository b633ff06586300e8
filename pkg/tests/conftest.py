import contextlib

from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@contextlib.contextmanager
def criterion(number: int, title: str):
    """Record one PASS/FAIL line for an acceptance criterion."""
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"[FAIL] criterion {number}: {title} -- {type(exc).__name__}: {exc}"[:300])
        raise
    ACCEPTANCE_LINES.append(f"[PASS] criterion {number}: {title}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
