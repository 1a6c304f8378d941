"""Bernoulli numbers, Bernoulli polynomials, and even zeta values, all exact.

Conventions follow the generating function t*e^(x*t)/(e^t - 1), so B_1 = -1/2.
Numbers are computed by the defining recurrence sum_{k<=n} C(n+1,k) B_k = 0
with a grow-on-demand table; no shortcut schemes, exactness is the point.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

from .errors import UnsupportedError
from .exactarith import PiValue

_table = [Fraction(1)]
_table_lock = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """The Bernoulli number B_n (B_1 = -1/2; zero for odd n >= 3)."""
    if n < 0:
        raise ValueError("Bernoulli numbers need n >= 0")
    if n >= len(_table):
        with _table_lock:
            while len(_table) <= n:
                m = len(_table)
                acc = Fraction(0)
                for k in range(m):
                    acc += comb(m + 1, k) * _table[k]
                _table.append(-acc / (m + 1))
    return _table[n]


def bernoulli_poly(n: int, x: Fraction | int) -> Fraction:
    """The Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k), exact."""
    if n < 0:
        raise ValueError("Bernoulli polynomials need n >= 0")
    x = Fraction(x)
    acc = Fraction(0)
    power = Fraction(1)  # x^(n-k), built from the k = n end downward
    for k in range(n, -1, -1):
        b = bernoulli_number(k)
        if b:
            acc += comb(n, k) * b * power
        power *= x
    return acc


def zeta_even(s: int) -> PiValue:
    """Euler's evaluation zeta(s) = (-1)^(s/2+1) B_s (2 pi)^s / (2 s!) for even s >= 2."""
    if s < 2 or s % 2 != 0:
        raise UnsupportedError(
            f"zeta({s}) has no exact closed form here; even s >= 2 required")
    coeff = Fraction((-1) ** (s // 2 + 1) * 2**s, 2 * factorial(s)) * bernoulli_number(s)
    return PiValue(coeff, s)
