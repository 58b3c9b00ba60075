import pytest

from malthusgrowth.calibration import build_parameters
from malthusgrowth.model import Parameters

_RESULTS = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def baseline():
    """Baseline parameters and the steady-state initial state."""
    return build_parameters()


@pytest.fixture(scope="session")
def params(baseline):
    return baseline[0]


@pytest.fixture(scope="session")
def s0(baseline):
    return baseline[1]


@pytest.fixture
def unit_shares():
    """Shares of the default calibration with unit growth and baseline preferences."""
    return Parameters(
        theta_z=0.16, theta_x=0.60, theta_l=0.24, g_a=1.0, g_m=1.0,
        gamma=0.2, eta=0.2 / 1.02, c_bar_a=0.25, c_bar_m=1.35,
    )


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion outcome for the terminal summary."""

    def record(label, passed, detail=""):
        request.config.stash.setdefault(_RESULTS, []).append((label, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in results:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")
