import sys
from fractions import Fraction
from math import factorial

import pytest


def sine_half_taylor(m, order):
    """Coefficients c[e] of 2 sin(m x / 2) for e < order, straight from the sine series."""
    c = [Fraction(0)] * order
    for k in range(order):
        e = 2 * k + 1
        if e >= order:
            break
        c[e] = 2 * Fraction(m, 2) ** e * (-1) ** k / factorial(e)
    return c


def long_divide(num, den, n):
    """First n coefficients of num/den for power series lists with den[0] != 0."""
    num = list(num) + [Fraction(0)] * n
    q = []
    for i in range(n):
        t = num[i] / den[0]
        q.append(t)
        for j, d in enumerate(den):
            if i + j < len(num):
                num[i + j] -= t * d
    return q


@pytest.fixture
def oracle():
    class O:
        sine = staticmethod(sine_half_taylor)
        divide = staticmethod(long_divide)
    return O


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(results, key=lambda n: int(n.split()[0][2:])):
        ok, detail = results[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
