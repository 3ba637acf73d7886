import sys

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def simplex2():
    from intsubdiv import parse_facets
    return parse_facets("1 2 3")


@pytest.fixture
def mixed_complex():
    # the non-pure 3-dimensional example <1234, 125, 345>
    from intsubdiv import parse_facets
    return parse_facets("1 2 3 4\n1 2 5\n3 4 5")



def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number].line())
