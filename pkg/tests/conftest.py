import math

import pytest

_ACCEPTANCE = []


def brute_force_class(entries, bound):
    """All positive tuples castling-reachable from ``entries`` without exceeding
    product ``bound``; plain search, shares no code with the package."""
    start = tuple(sorted(entries))
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for j in range(len(cur)):
            new = math.prod(cur[:j] + cur[j + 1:]) - cur[j]
            if new <= 0:
                continue
            nxt = tuple(sorted(cur[:j] + (new,) + cur[j + 1:]))
            if math.prod(nxt) <= bound and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def brute_force_minimal(entries):
    """Minimal-positive-dimension tuples of the class. Searching up to a product
    bound above the start is enough because a descent never goes uphill."""
    cls = brute_force_class(entries, 4 * math.prod(entries) + 64)
    low = min(math.prod(t) for t in cls)
    return sorted(t for t in cls if math.prod(t) == low)


@pytest.fixture
def acceptance():
    def record(criterion, ok, detail=""):
        _ACCEPTANCE.append((criterion, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}")
