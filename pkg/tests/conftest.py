import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from fuzztop.instances import (boolean, chain, diamond, lukasiewicz_tensor,
                               meet_tensor)
from fuzztop.powerset import Ground, Universe


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") \
        or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for line in lines:
            terminalreporter.write_line("  " + line)


@pytest.fixture(scope="session")
def bool2():
    return boolean()


@pytest.fixture(scope="session")
def chain3():
    return chain(3)


@pytest.fixture(scope="session")
def diamond4():
    return diamond()


@pytest.fixture(scope="session")
def u21(bool2):
    return Universe(bool2, meet_tensor(bool2), Ground(1))


@pytest.fixture(scope="session")
def u22(bool2):
    return Universe(bool2, meet_tensor(bool2), Ground(2))


@pytest.fixture(scope="session")
def u23(bool2):
    return Universe(bool2, meet_tensor(bool2), Ground(3))


@pytest.fixture(scope="session")
def u31_godel(chain3):
    return Universe(chain3, meet_tensor(chain3), Ground(1))


@pytest.fixture(scope="session")
def u31_luk(chain3):
    return Universe(chain3, lukasiewicz_tensor(chain3), Ground(1))


@pytest.fixture(scope="session")
def u32_godel(chain3):
    return Universe(chain3, meet_tensor(chain3), Ground(2))
