import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from nilpjordan import witnesses  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return witnesses.corpus()


@pytest.fixture(scope="session")
def samples():
    return witnesses.semilinear_samples()


@pytest.fixture(scope="session")
def small():
    """A few small named groups, built once."""
    return {
        "S3": witnesses.symmetric(3),
        "S4": witnesses.symmetric(4),
        "Q8": witnesses.quaternion8(),
        "D4": witnesses.dihedral(4),
        "H3": witnesses.heisenberg_monomial(3),
        "V4": witnesses.direct_product(witnesses.cyclic(2), witnesses.cyclic(2)),
        "C6": witnesses.cyclic(6),
    }


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.TITLES):
        status = module.RESULTS.get(number, "NOT RUN")
        terminalreporter.write_line(f"criterion {number:2d} {status}: {module.TITLES[number]}")
