import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from bfwalsh import walsh
from bfwalsh.gf2n import builtin_field

# Every spectrum computed anywhere in the suite is checked against Parseval.
walsh.CHECK_PARSEVAL = True

settings.register_profile(
    "bfwalsh", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("bfwalsh")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def f6():
    return builtin_field(6)


@pytest.fixture(scope="session")
def f8():
    return builtin_field(8)


@pytest.fixture(scope="session")
def f4():
    return builtin_field(4)


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.RESULTS[num])
