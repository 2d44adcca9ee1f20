"""Shared sink for the acceptance criterion verdict lines.

pytest's default fd-level capture swallows writes from passing tests, so
the acceptance suite records its PASS/FAIL lines here and conftest replays
them in the terminal summary, where capture is already torn down.
"""

LINES = []


def record(line):
    LINES.append(line)
