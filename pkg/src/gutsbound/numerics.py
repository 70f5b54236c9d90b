"""
Lobachevsky function and the volume of the regular ideal octahedron.

    Lambda(t) = -int_0^t log|2 sin u| du

is odd and pi-periodic. For |t| <= pi/2 it is evaluated from

    Lambda(t) = t - t log|2t| + sum_{n>=1} zeta(2n) t^(2n+1) / (n (2n+1) pi^(2n)),

whose terms shrink at least like 4^-n after reduction mod pi.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction

from .core import GutsboundError

DEFAULT_TOLERANCE = 1e-12
MAX_TERMS = 200
_ZETA_TABLE_SIZE = 32


class NonConvergence(GutsboundError):
    pass


def _bernoulli_even(count: int) -> list[Fraction]:
    """B_0, B_2, ..., B_{2(count-1)} via the Akiyama-Tanigawa algorithm."""
    size = 2 * count
    a = [Fraction(0)] * (size + 1)
    numbers = []
    for m in range(size + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        numbers.append(a[0])
    return [numbers[2 * k] for k in range(count)]


def _zeta_table() -> tuple[float, ...]:
    # zeta(2n) = (-1)^(n+1) B_2n (2 pi)^2n / (2 (2n)!)
    bern = _bernoulli_even(_ZETA_TABLE_SIZE + 1)
    table = [0.0]
    for n in range(1, _ZETA_TABLE_SIZE + 1):
        b = abs(bern[n])
        table.append(float(b) * (2 * math.pi) ** (2 * n) / (2 * math.factorial(2 * n)))
    return tuple(table)


_ZETA = _zeta_table()


def zeta_even(n: int) -> float:
    """zeta(2n) for n >= 1."""
    if n <= _ZETA_TABLE_SIZE:
        return _ZETA[n]
    # beyond the table 2^-2n is below double precision after a few terms
    return math.fsum(k ** (-2.0 * n) for k in range(1, 6))


def _reduce(theta: float) -> float:
    t = math.fmod(theta, math.pi)
    if t > math.pi / 2:
        t -= math.pi
    elif t <= -math.pi / 2:
        t += math.pi
    return t


def lobachevsky(theta: float, tolerance: float = DEFAULT_TOLERANCE, max_terms: int = MAX_TERMS) -> float:
    """
    Lobachevsky function to within ``tolerance``.

    >>> lobachevsky(0.0)
    0.0
    >>> round(lobachevsky(math.pi / 6), 5)
    0.50747
    """
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    if not math.isfinite(theta):
        raise ValueError(f"angle must be finite: {theta}")
    t = _reduce(theta)
    if t == 0.0:
        return 0.0
    ratio = (t / math.pi) ** 2
    power = 1.0
    terms = [t, -t * math.log(abs(2 * t))]
    for n in range(1, max_terms + 1):
        power *= ratio
        term = zeta_even(n) * t * power / (n * (2 * n + 1))
        terms.append(term)
        if abs(term) < tolerance / 10:
            return math.fsum(terms)
    raise NonConvergence(f"series for Lambda({theta}) needed more than {max_terms} terms")


@functools.cache
def v8() -> float:
    """Volume of the regular ideal hyperbolic octahedron, 8 Lambda(pi/4)."""
    return 8 * lobachevsky(math.pi / 4)
