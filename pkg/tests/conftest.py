"""One PASS/FAIL line per acceptance criterion in the terminal summary.

Tests opt in with ``@pytest.mark.criterion(n, "title")``; a criterion
passes only if every test carrying its number passes.
"""

CRITERIA: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props or (report.when != "call" and report.passed):
        return
    n, title = props["criterion"]
    _, ok = CRITERIA.get(n, (title, True))
    CRITERIA[n] = (title, ok and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        title, ok = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
