import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_results: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion implemented by the test")


def pytest_runtest_logreport(report):
    info = dict(report.user_properties).get("criterion")
    if info is None:
        return
    num, title = info
    entry = _results.setdefault(num, {"title": title, "ok": True, "ran": False})
    if report.when == "call":
        entry["ran"] = True
    if report.failed:
        entry["ok"] = False


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", (m.args[0], m.args[1])))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        r = _results[num]
        status = "PASS" if r["ok"] and r["ran"] else "FAIL"
        terminalreporter.write_line(f"criterion {num:>2}: {status}  {r['title']}")
