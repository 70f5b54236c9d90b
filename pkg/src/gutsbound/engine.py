"""
Guts contributions of each side and the resulting volume lower bounds.

Every bound is ``coefficient * V8`` with an exact rational coefficient. A side
that is acylindrical contributes -chi(S)/2 (its whole boundary sphere); an
upper or lower region of a 2-2 annulus configuration that is not an I-bundle
contributes -chi(S2(a,b,2,2))/2 = (1 - 1/a - 1/b)/2; I-bundle and solid torus
regions contribute nothing.
"""
from __future__ import annotations

import dataclasses
import enum
import functools
import itertools
from fractions import Fraction
from typing import Iterator, Union

from .core import (
    GutsboundError,
    HypothesisViolation,
    MirroredDiskOrbifold,
    SphereOrbifold,
    double_of_mirrored_disk,
    euler_sphere,
)
from .ibundles import BundleType, IBundleSpec
from .numerics import v8
from .splitting import (
    ALL_PAIRINGS,
    ACYLINDRICAL_FILL,
    SOLID_TORUS_FILL,
    Acylindrical,
    FillKind,
    NonsingularAnnulus,
    RationalTangle,
    RegionFill,
    RegularNeighborhood,
    Side,
    TwoTwoAnnuli,
    is_incompressible,
    orient_two_two,
    require_valid,
    validate_side,
)
from .tangle import GluingRecord, HungryForm, TangleWord, induced_permutation


class CompressibleSide(GutsboundError):
    pass


class GutsKind(enum.Enum):
    FULL = "full"
    PARTIAL_PAIR = "partial_pair"
    PARTIAL_BOTH = "partial_both"
    EMPTY = "empty"


@dataclasses.dataclass(frozen=True)
class GutsContribution:
    kind: GutsKind
    coefficient: Fraction
    pairs: tuple[tuple[int, int], ...] = ()


def full_coefficient(boundary: SphereOrbifold) -> Fraction:
    return -euler_sphere(boundary) / 2


@functools.lru_cache(maxsize=65536)
def pair_coefficient(a: int, b: int) -> Fraction:
    return (1 - Fraction(1, a) - Fraction(1, b)) / 2


EMPTY = GutsContribution(GutsKind.EMPTY, Fraction(0))


def _partial(pairs: list[tuple[int, int]]) -> GutsContribution:
    if not pairs:
        return EMPTY
    coefficient = sum((pair_coefficient(*p) for p in pairs), Fraction(0))
    kind = GutsKind.PARTIAL_PAIR if len(pairs) == 1 else GutsKind.PARTIAL_BOTH
    return GutsContribution(kind, coefficient, tuple(pairs))


def guts_contribution(cfg: Side, boundary: SphereOrbifold) -> GutsContribution:
    """
    What one side adds to the guts of the split orbifold.

    Raises :class:`CompressibleSide` for a rational tangle and
    :class:`InvalidSide` if the side does not validate against ``boundary``.
    """
    if isinstance(cfg, RationalTangle):
        raise CompressibleSide("a rational tangle side compresses the splitting surface")
    return _contribution(require_valid(cfg, boundary), boundary)


def _contribution(cfg: Side, boundary: SphereOrbifold) -> GutsContribution:
    # cfg is already validated against boundary
    if isinstance(cfg, Acylindrical):
        return GutsContribution(GutsKind.FULL, full_coefficient(boundary))
    if isinstance(cfg, RegularNeighborhood):
        return EMPTY
    if isinstance(cfg, NonsingularAnnulus):
        if cfg.region_fill.kind is FillKind.ACYLINDRICAL:
            # the solid torus around the core loop is absorbed; R keeps all of S
            return GutsContribution(GutsKind.FULL, full_coefficient(boundary))
        return EMPTY
    cfg = orient_two_two(cfg, boundary)
    labels = boundary.cone_orders
    pairs = []
    if cfg.upper_fill.kind is FillKind.ACYLINDRICAL:
        i, j = cfg.pairing.pair_ab
        pairs.append((labels[i], labels[j]))
    if cfg.lower_fill.kind is FillKind.ACYLINDRICAL:
        i, j = cfg.pairing.pair_cd
        pairs.append((labels[i], labels[j]))
    return _partial(pairs)


@dataclasses.dataclass(frozen=True)
class VolumeBound:
    coefficient: Fraction
    theorem_case: int
    contributions: tuple[GutsContribution, GutsContribution]
    corollary_case: int | None = None

    @property
    def numeric_value(self) -> float:
        return float(self.coefficient) * v8()


@dataclasses.dataclass(frozen=True)
class Compressible:
    reason: str = "a side is an orbifold rational tangle"


BoundOutcome = Union[VolumeBound, HungryForm, Compressible]

_WHOLE = (GutsKind.FULL, GutsKind.PARTIAL_BOTH)


def theorem_case(k0: GutsKind, k1: GutsKind) -> int | None:
    """
    Case number for a pair of contribution kinds, None when both are empty.

    A side whose upper and lower regions both count contributes as much as a
    fully acylindrical side and is labeled like one.
    """
    def rank(k):
        return 0 if k in _WHOLE else (1 if k is GutsKind.PARTIAL_PAIR else 2)
    r = tuple(sorted((rank(k0), rank(k1))))
    return {(0, 0): 1, (0, 1): 2, (0, 2): 3, (1, 1): 4, (1, 2): 5}.get(r)


def combine(c0: GutsContribution, c1: GutsContribution) -> VolumeBound | None:
    case = theorem_case(c0.kind, c1.kind)
    if case is None:
        return None
    return VolumeBound(c0.coefficient + c1.coefficient, case, (c0, c1))


def check_hypotheses(surface: SphereOrbifold) -> None:
    if len(surface) != 4:
        raise HypothesisViolation(f"splitting surface must have 4 cone points, got {surface}")
    if euler_sphere(surface) >= 0:
        raise HypothesisViolation(
            f"{surface} is Euclidean; it cannot be essential in a hyperbolic orbifold")


def volume_bound(surface: SphereOrbifold, side0: Side, side1: Side,
                 sigma: TangleWord | None = None) -> BoundOutcome:
    """
    Lower volume bound for an orbifold split along ``surface``.

    ``side0`` is read against the surface labels, ``side1`` against the labels
    carried by ``sigma`` (the identity if omitted). Both-empty sides give a
    :class:`HungryForm` instead of a bound.
    """
    check_hypotheses(surface)
    sigma = sigma or TangleWord()
    boundary1 = surface.permuted(induced_permutation(sigma))
    if not isinstance(side0, RationalTangle):
        require_valid(side0, surface)
    if not isinstance(side1, RationalTangle):
        require_valid(side1, boundary1)
    if not is_incompressible(side0, side1):
        return Compressible()
    bound = combine(_contribution(side0, surface), _contribution(side1, boundary1))
    if bound is None:
        return HungryForm(surface, side0, side1, GluingRecord.of(sigma),
                          surface.cone_orders, boundary1.cone_orders)
    return bound


COROLLARY_CASE = {3: 1, 5: 2}


def corollary_bound(d: MirroredDiskOrbifold, side0: Side,
                    sigma: TangleWord | None = None) -> BoundOutcome:
    """Bound for an orbifold containing D2*(n1,n2), via its doubled boundary sphere."""
    surface = double_of_mirrored_disk(d)
    outcome = volume_bound(surface, side0, RegularNeighborhood(), sigma)
    if isinstance(outcome, VolumeBound):
        return dataclasses.replace(outcome, corollary_case=COROLLARY_CASE[outcome.theorem_case])
    if isinstance(outcome, HungryForm):
        return dataclasses.replace(outcome, surface=d)
    return outcome


# -- exhaustive sweep ---------------------------------------------------------

CASE_KEYS = ("1", "2", "3", "4", "5", "C1", "C2")


@dataclasses.dataclass(frozen=True)
class Witness:
    case: str
    surface: tuple[int, ...]
    contributions: tuple[GutsContribution, ...]

    @property
    def formula_labels(self) -> tuple[int, ...]:
        """The cone orders the case formula is evaluated on."""
        labels: list[int] = []
        whole = False
        for c in self.contributions:
            if c.kind in _WHOLE:
                whole = True
            elif c.kind is GutsKind.PARTIAL_PAIR:
                labels.extend(c.pairs[0])
        if whole:
            return self.surface + tuple(labels)
        return tuple(labels)

    def guts_points(self) -> int:
        return sum(4 if c.kind in _WHOLE else 2 * len(c.pairs) for c in self.contributions)


@dataclasses.dataclass(frozen=True)
class SweepResult:
    minima: dict[str, tuple[Fraction, Witness]]
    global_minimum: tuple[Fraction, Witness] | None


def representative_sides(surface: SphereOrbifold) -> Iterator[Side]:
    """
    Valid non-tangle sides covering every contribution a side can make.

    Each region is tried as acylindrical, as a solid torus and as a type III
    bundle (which fits any four boundary labels); the contribution only
    depends on which kind of fill a region has.
    """
    def fills(required):
        return [ACYLINDRICAL_FILL, SOLID_TORUS_FILL,
                RegionFill.ibundle(IBundleSpec(BundleType.III, required))]

    labels = surface.cone_orders
    yield Acylindrical()
    for pairing in ALL_PAIRINGS[:3]:
        for fill in fills(labels):
            cfg = NonsingularAnnulus(pairing, 3, fill)
            if validate_side(cfg, surface).ok:
                yield cfg
    for pairing in ALL_PAIRINGS:
        ab = tuple(labels[i] for i in pairing.pair_ab)
        cd = tuple(labels[i] for i in pairing.pair_cd)
        for n in (1, 2):
            for upper, lower in itertools.product(fills(ab + (2, 2)), fills(cd + (2, 2))):
                cfg = TwoTwoAnnuli(pairing, n, upper, lower)
                if validate_side(cfg, surface).ok:
                    yield cfg


def side_contributions(surface: SphereOrbifold) -> list[GutsContribution]:
    seen = {}
    for side in representative_sides(surface):
        c = guts_contribution(side, surface)
        key = (c.kind, tuple(tuple(sorted(p)) for p in c.pairs))
        seen.setdefault(key, c)
    return list(seen.values())


def _better(candidate: tuple[Fraction, Witness], current: tuple[Fraction, Witness] | None) -> bool:
    if current is None:
        return True
    if candidate[0] != current[0]:
        return candidate[0] < current[0]
    return candidate[1].guts_points() < current[1].guts_points()


def minimum_positive_bound(label_max: int, cases: tuple[str, ...] = CASE_KEYS) -> SweepResult:
    """
    Smallest positive coefficient per case over all labels in [2, label_max].

    Ties within a case keep the first witness in enumeration order. The
    global minimum prefers, among equal coefficients, the witness whose guts
    boundary meets the fewest cone points.
    """
    if label_max < 2:
        raise ValueError("label_max must be at least 2")
    minima: dict[str, tuple[Fraction, Witness]] = {}

    def offer(key, coefficient, witness):
        if key in cases and coefficient > 0:
            if key not in minima or coefficient < minima[key][0]:
                minima[key] = (coefficient, witness)

    labels = range(2, label_max + 1)
    for quad in itertools.combinations_with_replacement(labels, 4):
        surface = SphereOrbifold(quad)
        if euler_sphere(surface) >= 0:
            continue
        contributions = side_contributions(surface)
        for c0, c1 in itertools.combinations_with_replacement(contributions, 2):
            bound = combine(c0, c1)
            if bound is not None:
                offer(str(bound.theorem_case), bound.coefficient, Witness(str(bound.theorem_case), quad, (c0, c1)))
    for n1, n2 in itertools.combinations_with_replacement(labels, 2):
        surface = double_of_mirrored_disk(MirroredDiskOrbifold(n1, n2))
        if euler_sphere(surface) >= 0:
            continue
        for c0 in side_contributions(surface):
            bound = combine(c0, EMPTY)
            if bound is not None:
                key = f"C{COROLLARY_CASE[bound.theorem_case]}"
                offer(key, bound.coefficient, Witness(key, (n1, n2), (c0,)))
    best = None
    for key in CASE_KEYS:
        if key in minima and _better(minima[key], best):
            best = minima[key]
    return SweepResult({k: minima[k] for k in CASE_KEYS if k in minima}, best)
