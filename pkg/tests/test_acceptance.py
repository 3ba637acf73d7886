"""Acceptance battery: one test per criterion, each at its stated tolerance and time budget.

Every result line is also printed in the terminal summary (see conftest.py).
"""
import pytest

from intsubdiv.selftest import run_all

RESULTS = {}


@pytest.fixture(scope="module")
def results():
    if not RESULTS:
        for r in run_all(seed=0):
            RESULTS[r.number] = r
    return RESULTS


@pytest.mark.parametrize("number", range(1, 14))
def test_criterion(results, number):
    r = results[number]
    print(r.line())
    assert r.passed, r.line()
