"""Shared fixtures: loaded example models, acceptance summary hook."""

import pytest

from hopfmonad import presentation, zoo
from hopfmonad.exactla import FieldSpec


def pytest_terminal_summary(terminalreporter):
    import sys
    log = []
    for name, mod in sys.modules.items():
        if name.rsplit(".", 1)[-1] == "test_acceptance":
            log = getattr(mod, "ACCEPTANCE_LOG", [])
            break
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, ok in sorted(log, key=lambda x: x[0]):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} - {description}")

Q = FieldSpec.rationals()
F3 = FieldSpec.prime(3)
F7 = FieldSpec.prime(7)


@pytest.fixture(scope="session")
def trivial():
    return presentation.load(zoo.build_trivial(Q))


@pytest.fixture(scope="session")
def kz2():
    return presentation.load(
        zoo.build_group_algebra(zoo.cyclic_group_table(2), Q, "kZ2",
                                with_rmatrix=True))


@pytest.fixture(scope="session")
def kz2_f3():
    return presentation.load(
        zoo.build_group_algebra(zoo.cyclic_group_table(2), F3, "kZ2_F3"))


@pytest.fixture(scope="session")
def ks3():
    return presentation.load(
        zoo.build_group_algebra(zoo.symmetric3_table(), Q, "kS3"))


@pytest.fixture(scope="session")
def ks3_f3():
    return presentation.load(
        zoo.build_group_algebra(zoo.symmetric3_table(), F3, "kS3_F3"))


@pytest.fixture(scope="session")
def sweedler():
    return presentation.load(zoo.build_sweedler(Q))


@pytest.fixture(scope="session")
def taft3():
    return presentation.load(zoo.build_taft(3, 7))


@pytest.fixture(scope="session")
def dz2():
    return presentation.load(
        zoo.build_drinfeld_double_group(zoo.cyclic_group_table(2), Q, "DZ2"))


@pytest.fixture(scope="session")
def dz2_f3():
    return presentation.load(
        zoo.build_drinfeld_double_group(zoo.cyclic_group_table(2), F3, "DZ2_F3"))


@pytest.fixture(scope="session")
def pair_groupoid():
    return presentation.load(zoo.build_pair_groupoid(Q))


@pytest.fixture(scope="session")
def disconnected_groupoid():
    return presentation.load(zoo.build_disconnected_groupoid(Q))


@pytest.fixture(scope="session")
def one_object_z2():
    return presentation.load(
        zoo.build_groupoid_algebra(["1"], [("g", 0, 0)], Q, "one_object_z2",
                                   compose=[[0, 1], [1, 0]]))
