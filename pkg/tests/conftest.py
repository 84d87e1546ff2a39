import pytest

from salvetti.coxeter import parse_coxeter_spec

FINITE_RANK_LE4 = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "H4", "F4",
                   "A1xA1", "A1xA2", "A2xA2", "A1xB3", "A1xH3", "B2xB2", "A1xA1xA1xA1"]
FINITE_RANK_LE4 += [f"I2({m})" for m in range(2, 11)]
AFFINE_SMALL = ["~A1", "~A2", "~A3", "~C2", "~G2"]


@pytest.fixture
def cox():
    return parse_coxeter_spec


ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        key = report.nodeid.split("::")[-1]
        ACCEPTANCE[key] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split("_")[2])):
        status, secs = ACCEPTANCE[key]
        terminalreporter.write_line(f"{status}  {key}  ({secs:.1f} s)")
