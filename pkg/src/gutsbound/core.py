"""
Exact orbifold arithmetic for cone labels and small 2-orbifolds.

Euler characteristics are carried as :class:`fractions.Fraction`; floats only
appear once a coefficient is multiplied by the octahedron volume for display.
"""
from __future__ import annotations

import dataclasses
import enum
import functools
from fractions import Fraction
from typing import Iterable, Sequence

ConeLabel = int

DEFAULT_LABEL_CAP = 10**6


class GutsboundError(Exception):
    """Base class for errors raised by this package."""


class InvalidLabel(GutsboundError, ValueError):
    pass


class HypothesisViolation(GutsboundError):
    """The attested hypotheses cannot hold for the given data."""


def check_label(value: object, cap: int = DEFAULT_LABEL_CAP) -> ConeLabel:
    """
    Validate a cone order and return it as an int.

    >>> check_label(3)
    3
    >>> check_label(1)
    Traceback (most recent call last):
    ...
    gutsbound.core.InvalidLabel: cone order < 2: 1
    """
    if type(value) is int and 2 <= value <= cap:
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidLabel(f"cone order must be an integer: {value!r}")
    if value < 2:
        raise InvalidLabel(f"cone order < 2: {value}")
    if value > cap:
        raise InvalidLabel(f"cone order {value} exceeds cap {cap}")
    return value


@dataclasses.dataclass(frozen=True, eq=False)
class SphereOrbifold:
    """
    A 2-sphere with cone points.

    ``cone_orders`` keeps the order the caller gave, so positions can name
    marked points (pairings and tangle words index into it). Equality and
    hashing only see the sorted multiset.
    """
    cone_orders: tuple[ConeLabel, ...]

    def __init__(self, cone_orders: Iterable[int] = ()):
        labels = tuple(check_label(n) for n in cone_orders)
        object.__setattr__(self, "cone_orders", labels)

    @property
    def canonical(self) -> tuple[ConeLabel, ...]:
        return tuple(sorted(self.cone_orders))

    def __len__(self) -> int:
        return len(self.cone_orders)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SphereOrbifold):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(("S2", self.canonical))

    def __str__(self) -> str:
        return "S2(" + ",".join(map(str, self.cone_orders)) + ")"

    def permuted(self, perm: Sequence[int]) -> SphereOrbifold:
        """Move the label at position i to position perm[i]."""
        out = [0] * len(self.cone_orders)
        for i, n in enumerate(self.cone_orders):
            out[perm[i]] = n
        return SphereOrbifold._trusted(tuple(out))

    @classmethod
    def _trusted(cls, labels: tuple[ConeLabel, ...]) -> SphereOrbifold:
        # labels already checked
        obj = object.__new__(cls)
        object.__setattr__(obj, "cone_orders", labels)
        return obj


@dataclasses.dataclass(frozen=True)
class MirroredDiskOrbifold:
    """A disk with mirrored boundary and two interior cone points; stored sorted."""
    n1: ConeLabel
    n2: ConeLabel

    def __post_init__(self):
        a, b = sorted((check_label(self.n1), check_label(self.n2)))
        object.__setattr__(self, "n1", a)
        object.__setattr__(self, "n2", b)

    def __str__(self) -> str:
        return f"D2*({self.n1},{self.n2})"


class TripleClass(enum.Enum):
    SPHERICAL = "spherical"
    RIGID_EUCLIDEAN = "rigid_euclidean"
    HYPERBOLIC = "hyperbolic"


def euler_sphere(s: SphereOrbifold) -> Fraction:
    """
    chi = 2 - sum(1 - 1/n).

    >>> euler_sphere(SphereOrbifold([2, 3, 3, 3]))
    Fraction(-1, 2)
    """
    return _euler_sphere(s.canonical)


@functools.lru_cache(maxsize=65536)
def _euler_sphere(labels: tuple[int, ...]) -> Fraction:
    return 2 - sum((1 - Fraction(1, n) for n in labels), Fraction(0))


def euler_mirrored_disk(d: MirroredDiskOrbifold) -> Fraction:
    return Fraction(-1) + Fraction(1, d.n1) + Fraction(1, d.n2)


def classify_triple(p: int, q: int, r: int) -> TripleClass:
    total = Fraction(1, check_label(p)) + Fraction(1, check_label(q)) + Fraction(1, check_label(r))
    if total > 1:
        return TripleClass.SPHERICAL
    if total == 1:
        return TripleClass.RIGID_EUCLIDEAN
    return TripleClass.HYPERBOLIC


def double_of_mirrored_disk(d: MirroredDiskOrbifold) -> SphereOrbifold:
    """Boundary of a regular neighborhood of D2*(n1,n2): S2(n1,n1,n2,n2)."""
    return SphereOrbifold((d.n1, d.n1, d.n2, d.n2))


def format_fraction(q: Fraction) -> str:
    """Always ``p/q``, also for integers, so the string parses back unambiguously."""
    return f"{q.numerator}/{q.denominator}"
