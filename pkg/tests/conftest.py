import random
from fractions import Fraction

import pytest

from realwaring import from_raw_coeffs

P2_RAW = [1, 10, 10, 10, 10, 1]        # x^5+10x^4y+10x^3y^2+10x^2y^3+10xy^4+y^5
P1_RAW = [1, 5, 10, 10, 10, 1]         # same with 5xy^4
EX22_RAW = [5226, 4970, 1860, 340, 30, 1]
EX25_RAW = [240, 224, 72, 8, 1]
REM23_RAW = [1, 0, 3, 0]               # 3x^2y + y^3


@pytest.fixture
def p2():
    return from_raw_coeffs(P2_RAW)


@pytest.fixture
def p1():
    return from_raw_coeffs(P1_RAW)


@pytest.fixture
def ex22():
    return from_raw_coeffs(EX22_RAW)


@pytest.fixture
def ex25():
    return from_raw_coeffs(EX25_RAW)


@pytest.fixture
def rem23():
    return from_raw_coeffs(REM23_RAW)


def random_forms(n, seed, lo=-100, hi=100, degrees=(2, 9)):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        d = rng.randint(*degrees)
        raw = [rng.randint(lo, hi) for _ in range(d + 1)]
        if any(raw):
            out.append(from_raw_coeffs(raw))
    return out


def random_rational(rng, bound=50):
    den = 0
    while den == 0:
        den = rng.randint(-bound, bound)
    return Fraction(rng.randint(-bound, bound), den)


# one pass/fail line per acceptance criterion
_criteria = {}


def pytest_runtest_logreport(report):
    num = dict(report.user_properties).get("criterion")
    if num is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _criteria.setdefault(num, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria, key=lambda k: (int(k.split(".")[0]), k)):
        outcomes = _criteria[num]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num): acceptance criterion number")


@pytest.fixture(autouse=True)
def _record_criterion(request, record_property):
    mark = request.node.get_closest_marker("criterion")
    if mark is not None:
        record_property("criterion", str(mark.args[0]))
