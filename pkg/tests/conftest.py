"""Shared fixtures and the acceptance-criteria summary hook."""

import pytest

from sminf import GF, QQ, Poly, PolyMatrix, RatFun, RatMatrix

GF101 = GF(101)
BOTH_FIELDS = (QQ, GF101)


@pytest.fixture(params=BOTH_FIELDS, ids=["Q", "GF101"])
def field(request):
    return request.param


def p(field, *ints) -> Poly:
    """Polynomial from ascending integer coefficients."""
    return Poly.from_ints(field, ints)


def rf(field, num, den=(1,)) -> RatFun:
    """Rational function from ascending integer coefficient lists."""
    return RatFun(p(field, *num), p(field, *den))


def pm(field, rows) -> PolyMatrix:
    """Polynomial matrix from a grid of ascending integer coefficient lists."""
    return PolyMatrix(
        field, [[p(field, *cell) for cell in row] for row in rows], cols=len(rows[0])
    )


def rm(field, rows) -> RatMatrix:
    """Rational matrix from a grid of (num, den) coefficient list pairs."""
    return RatMatrix(
        field,
        [[rf(field, num, den) for num, den in row] for row in rows],
        cols=len(rows[0]),
    )


def worked_host(field) -> PolyMatrix:
    """The 2 x 2 desk instance used throughout: [[0, 1], [1, s]]."""
    return pm(field, [[(0,), (1,)], [(1,), (0, 1)]])


# -- acceptance summary ------------------------------------------------------

_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for nodeid in sorted(_acceptance):
        outcome = _acceptance[nodeid]
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(
            f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}"
        )
