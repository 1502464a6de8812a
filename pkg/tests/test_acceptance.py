"""Acceptance gate: criteria 1-10 at their stated tolerances and time limits.

Each test prints one PASS/FAIL line; the lines are also collected into the
pytest terminal summary.  Run this file directly to get just the table:

    python tests/test_acceptance.py
"""

import pytest

from admkit import acceptance

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []


@pytest.mark.parametrize("ident", [i for i, _ in acceptance.CHECKS])
def test_criterion(ident):
    result = dict(acceptance.CHECKS)[ident]()
    line = result.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert result.passed, result.detail
    assert result.within_time, f"{ident} took {result.seconds:.1f}s, limit {result.limit}s"


if __name__ == "__main__":
    ok = True
    for res in acceptance.run_checks():
        print(res.line())
        ok = ok and res.ok
    raise SystemExit(0 if ok else 1)
