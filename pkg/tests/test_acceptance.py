"""Acceptance gate: one PASS/FAIL line per criterion, exact comparisons, wall-clock limits.

Lines are collected into ``RESULTS`` and echoed in the terminal summary
(see conftest.py), so they show up in a plain ``pytest -v`` run.
"""
import pytest

from codetops.verify import CRITERIA, run_criterion

SEED = 42
RESULTS = []


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda n: f"C{n}")
def test_criterion(number):
    r = run_criterion(number, SEED)
    RESULTS.append(r.line())
    print(r.line())
    assert r.passed, "; ".join(r.details)
    assert r.in_time, f"took {r.elapsed:.2f}s, limit {r.limit:g}s"
