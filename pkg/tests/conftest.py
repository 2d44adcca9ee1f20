import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    import _acclog

    if _acclog.LINES:
        terminalreporter.section("acceptance criteria")
        for line in _acclog.LINES:
            terminalreporter.write_line(line)
