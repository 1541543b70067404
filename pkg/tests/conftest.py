import time

import pytest

TITLES = {
    1: "B2 cluster variables match the six reference formulas",
    2: "C2 minors match the reference Laurent polynomials",
    3: "crystal chains reproduced edge for edge",
    4: "cluster variable counts equal almost positive root counts",
    5: "theorem suite for B2-B4, C2-C4, D3-D4",
    6: "identity suite at ranks 3-4",
    7: "structural properties (1000 random cases each)",
    8: "factorization round trip and commutation relations",
}

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    slot = _results.setdefault(n, {"ok": True, "seconds": 0.0, "notes": []})
    if rep.when == "call":
        slot["seconds"] += rep.duration
    failed = rep.failed or (rep.when == "call" and hasattr(rep, "wasxfail"))
    if failed:
        slot["ok"] = False
        why = getattr(rep, "wasxfail", "") or "failed"
        slot["notes"].append(f"{item.name}: {why}")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(TITLES):
        if n not in _results:
            continue
        slot = _results[n]
        status = "PASS" if slot["ok"] else "FAIL"
        tr.write_line(f"criterion {n}: {status}  {TITLES[n]}  ({slot['seconds']:.2f} s)")
        for note in slot["notes"]:
            tr.write_line(f"    {note}")


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


@pytest.fixture
def timer():
    return Timer
