"""
Declared topology of one side Q of the orbifold cut along the 4-point sphere.

A side is one of:

* :class:`Acylindrical` - no essential annuli;
* :class:`RationalTangle` - a 2-strand or H-shaped rational tangle (makes the
  splitting sphere compressible);
* :class:`NonsingularAnnulus` - one essential nonsingular annulus around a
  singular loop of order ``core_label``, region R filled by ``region_fill``;
* :class:`TwoTwoAnnuli` - one or two D2(2,2) annuli separating the pairs,
  central arc of order ``n`` (``n == 1`` means no arc), regions R1 and R2;
* :class:`RegularNeighborhood` - the regular neighborhood of a mirrored disk,
  only used as the second side for D2*(n1,n2).

Marked points on the boundary are addressed by 0-based positions into
``SphereOrbifold.cone_orders``.
"""
from __future__ import annotations

import dataclasses
import enum
from collections import Counter
from typing import Union

from .core import ConeLabel, GutsboundError, SphereOrbifold
from .ibundles import IBundleSpec, boundary_labels


@dataclasses.dataclass(frozen=True)
class Pairing:
    pair_ab: tuple[int, int]
    pair_cd: tuple[int, int]

    def __post_init__(self):
        ab = tuple(sorted(self.pair_ab))
        cd = tuple(sorted(self.pair_cd))
        if len(ab) != 2 or len(cd) != 2 or sorted(ab + cd) != [0, 1, 2, 3]:
            raise ValueError(f"pairing must split positions 0..3 into two pairs: {ab} / {cd}")
        object.__setattr__(self, "pair_ab", ab)
        object.__setattr__(self, "pair_cd", cd)

    def swapped(self) -> Pairing:
        return Pairing(self.pair_cd, self.pair_ab)

    def relabeled(self, perm) -> Pairing:
        return Pairing(tuple(perm[i] for i in self.pair_ab), tuple(perm[i] for i in self.pair_cd))


ALL_PAIRINGS = tuple(
    Pairing(ab, tuple(i for i in range(4) if i not in ab))
    for ab in [(0, 1), (0, 2), (0, 3), (2, 3), (1, 3), (1, 2)]
)


class FillKind(enum.Enum):
    ACYLINDRICAL = "acylindrical"
    IBUNDLE = "ibundle"
    SOLID_TORUS = "solid_torus"


@dataclasses.dataclass(frozen=True)
class RegionFill:
    kind: FillKind
    spec: IBundleSpec | None = None

    def __post_init__(self):
        if (self.kind is FillKind.IBUNDLE) != (self.spec is not None):
            raise ValueError("an I-bundle fill needs a spec, other fills must not carry one")

    @classmethod
    def ibundle(cls, spec: IBundleSpec) -> RegionFill:
        return cls(FillKind.IBUNDLE, spec)


ACYLINDRICAL_FILL = RegionFill(FillKind.ACYLINDRICAL)
SOLID_TORUS_FILL = RegionFill(FillKind.SOLID_TORUS)


class TangleShape(enum.Enum):
    TWO_STRAND = "two_strand"
    H_SHAPE = "h_shape"


@dataclasses.dataclass(frozen=True)
class Acylindrical:
    pass


@dataclasses.dataclass(frozen=True)
class RationalTangle:
    shape: TangleShape = TangleShape.TWO_STRAND


@dataclasses.dataclass(frozen=True)
class NonsingularAnnulus:
    pairing: Pairing
    core_label: int
    region_fill: RegionFill


@dataclasses.dataclass(frozen=True)
class TwoTwoAnnuli:
    pairing: Pairing
    n: int
    upper_fill: RegionFill
    lower_fill: RegionFill

    def swapped(self) -> TwoTwoAnnuli:
        return TwoTwoAnnuli(self.pairing.swapped(), self.n, self.lower_fill, self.upper_fill)


@dataclasses.dataclass(frozen=True)
class RegularNeighborhood:
    pass


SideConfiguration = Union[Acylindrical, RationalTangle, NonsingularAnnulus, TwoTwoAnnuli]
Side = Union[SideConfiguration, RegularNeighborhood]
SIDE_TYPES = (Acylindrical, RationalTangle, NonsingularAnnulus, TwoTwoAnnuli, RegularNeighborhood)


@dataclasses.dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


class InvalidSide(GutsboundError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("; ".join(map(str, report.violations)))


def _labels(boundary: SphereOrbifold, pair: tuple[int, int]) -> tuple[ConeLabel, ConeLabel]:
    i, j = pair
    return boundary.cone_orders[i], boundary.cone_orders[j]


def _is_22(labels) -> bool:
    return tuple(labels) == (2, 2)


def _check_fill(fill: RegionFill, required: tuple[int, ...], region: str) -> list[Violation]:
    if fill.kind is not FillKind.IBUNDLE:
        return []
    got = boundary_labels(fill.spec)
    want = tuple(sorted(required))
    if got != want:
        return [Violation("fill-boundary",
                          f"{region} I-bundle {fill.spec} has boundary {got}, region needs {want}")]
    return []


def _annulus_violations(cfg: NonsingularAnnulus, boundary: SphereOrbifold) -> list[Violation]:
    out = []
    ab = _labels(boundary, cfg.pairing.pair_ab)
    cd = _labels(boundary, cfg.pairing.pair_cd)
    if _is_22(ab) or _is_22(cd):
        out.append(Violation("essential-torus",
                             "a pair {2,2} cut off by the annulus bounds an essential torus"))
    if not isinstance(cfg.core_label, int) or cfg.core_label < 2:
        out.append(Violation("core-label", f"core loop order must be >= 2, got {cfg.core_label}"))
    if cfg.region_fill.kind is FillKind.SOLID_TORUS:
        out.append(Violation("solid-torus-fill", "region R cannot be a solid orbifold torus"))
    out += _check_fill(cfg.region_fill, boundary.cone_orders, "region R")
    return out


def _two_two_violations(cfg: TwoTwoAnnuli, boundary: SphereOrbifold) -> list[Violation]:
    out = []
    ab = _labels(boundary, cfg.pairing.pair_ab)
    cd = _labels(boundary, cfg.pairing.pair_cd)
    if _is_22(cd):
        out.append(Violation("essential-torus",
                             "pair cd = {2,2} gives an essential torus (or an orbifold-torus boundary)"))
    if not isinstance(cfg.n, int) or cfg.n < 1:
        out.append(Violation("n-range", f"central arc order must be >= 1, got {cfg.n}"))
    elif _is_22(ab) and cfg.n != 1:
        out.append(Violation("n-must-be-1", "n must be 1 when pair ab = {2,2}"))
    if _is_22(ab) and cfg.upper_fill.kind is not FillKind.SOLID_TORUS:
        out.append(Violation("upper-solid-torus",
                             "when pair ab = {2,2} region R1 must be a solid orbifold torus"))
    # a solid orbifold torus has boundary S2(2,2,2,2)
    if not _is_22(ab) and cfg.upper_fill.kind is FillKind.SOLID_TORUS:
        out.append(Violation("solid-torus-fill", "region R1 is a solid torus only when ab = {2,2}"))
    if cfg.lower_fill.kind is FillKind.SOLID_TORUS:
        out.append(Violation("solid-torus-fill", "region R2 cannot be a solid orbifold torus"))
    out += _check_fill(cfg.upper_fill, ab + (2, 2), "region R1")
    out += _check_fill(cfg.lower_fill, cd + (2, 2), "region R2")
    return out


def validate_side(cfg: Side, boundary: SphereOrbifold) -> ValidationReport:
    """
    Check a declared side against the admissible essential-annulus configurations.

    Never raises; problems come back as coded violations. A
    :class:`TwoTwoAnnuli` candidate is accepted if it validates with either
    pair playing the role of ``cd``.
    """
    if len(boundary) != 4:
        return ValidationReport((Violation("arity", "boundary must have exactly 4 cone points"),))
    if isinstance(cfg, (Acylindrical, RationalTangle)):
        return ValidationReport()
    if isinstance(cfg, RegularNeighborhood):
        odd = [n for n, k in Counter(boundary.cone_orders).items() if k % 2]
        if odd:
            return ValidationReport((Violation(
                "not-a-double", "a regular neighborhood boundary has the form S2(n1,n1,n2,n2)"),))
        return ValidationReport()
    if isinstance(cfg, NonsingularAnnulus):
        return ValidationReport(tuple(_annulus_violations(cfg, boundary)))
    if isinstance(cfg, TwoTwoAnnuli):
        direct = _two_two_violations(cfg, boundary)
        if direct and not _two_two_violations(cfg.swapped(), boundary):
            return ValidationReport()
        return ValidationReport(tuple(direct))
    return ValidationReport((Violation("unknown-side", f"not a side configuration: {cfg!r}"),))


def orient_two_two(cfg: TwoTwoAnnuli, boundary: SphereOrbifold) -> TwoTwoAnnuli:
    """Return the orientation of ``cfg`` whose ``cd`` pair satisfies the constraints."""
    if _two_two_violations(cfg, boundary) and not _two_two_violations(cfg.swapped(), boundary):
        return cfg.swapped()
    return cfg


def require_valid(cfg: Side, boundary: SphereOrbifold) -> Side:
    report = validate_side(cfg, boundary)
    if not report.ok:
        raise InvalidSide(report)
    return cfg


def is_incompressible(side0: Side, side1: Side) -> bool:
    """The splitting surface compresses exactly when a side is a rational tangle."""
    return not isinstance(side0, RationalTangle) and not isinstance(side1, RationalTangle)
