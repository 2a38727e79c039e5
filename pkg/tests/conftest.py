import pytest


def dp_counts(top, parts):
    """Coin-change table: entry t is the number of nonnegative solutions."""
    ways = [1] + [0] * top
    for p in parts:
        for x in range(p, top + 1):
            ways[x] += ways[x - p]
    return ways


def brute_gaps(parts, top):
    """Integers in [0, top] that are not nonnegative combinations of parts."""
    rep = {0}
    for t in range(1, top + 1):
        if any(t - p in rep for p in parts if t >= p):
            rep.add(t)
    return [t for t in range(top + 1) if t not in rep]


@pytest.fixture
def dp():
    return dp_counts


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body sets ``.detail`` and the
    outcome is taken from the test result."""

    class Line:
        detail = ""

    line = Line()
    yield line
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {request.node.name}  {line.detail}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
