import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("explore", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_acceptance: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    summary = next((c for t, c in report.user_properties if t == "summary"), "")
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _acceptance[name] = ("PASS" if report.passed else "FAIL", summary)
    elif report.when == "teardown" and name in _acceptance:
        # the summary is recorded by a fixture, after the call phase
        _acceptance[name] = (_acceptance[name][0], summary)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        outcome, summary = _acceptance[name]
        terminalreporter.write_line(f"{outcome}  {name}  {summary}".rstrip())
