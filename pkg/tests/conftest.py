import pytest

_ACCEPTANCE: list[tuple[str, bool, float]] = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    import time

    start = time.perf_counter()
    state = {"label": request.node.name}

    def label(text):
        state["label"] = text

    yield label
    failed = getattr(request.node, "_failed", True)
    _ACCEPTANCE.append((state["label"], not failed, time.perf_counter() - start))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item._failed = rep.failed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, secs in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  ({secs:.2f}s)")
