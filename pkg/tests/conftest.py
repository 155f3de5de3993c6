import pytest

from amplekit.groups import cyclic_group, klein_four, trivial_group
from amplekit.partial import enumerate_symmetric_inverse
from amplekit.rees import brandt


@pytest.fixture(scope="session")
def B2():
    """The five-element Brandt semigroup B(trivial, {1,2})."""
    return brandt(trivial_group(), 2)


@pytest.fixture(scope="session")
def B2_Z2():
    return brandt(cyclic_group(2), 2)


@pytest.fixture(scope="session")
def I2():
    return enumerate_symmetric_inverse(2)


@pytest.fixture(scope="session")
def I3():
    return enumerate_symmetric_inverse(3)


@pytest.fixture(scope="session")
def klein():
    return klein_four()


def idx(B, *names):
    """Element indices of a Brandt semigroup from names like "(1,1,2)"."""
    return sorted(B.semigroup.index(n) for n in names)


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(str(k).split()[0]), str(k))):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} - {detail}")
