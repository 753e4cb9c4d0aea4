_criteria: dict[str, tuple[int, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, text = marker.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    previous = _criteria.get(item.nodeid)
    _criteria[item.nodeid] = (number, text, outcome if previous is None else previous[2])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, outcome in sorted(_criteria.values()):
        terminalreporter.write_line(f"[{outcome}] criterion {number}: {text}")
