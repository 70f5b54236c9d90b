import dataclasses
import itertools

import pytest
from hypothesis import given, strategies as st

from gutsbound.core import SphereOrbifold
from gutsbound.ibundles import BundleType, IBundleSpec, all_specs
from gutsbound.splitting import (
    ACYLINDRICAL_FILL,
    ALL_PAIRINGS,
    SIDE_TYPES,
    SOLID_TORUS_FILL,
    Acylindrical,
    InvalidSide,
    NonsingularAnnulus,
    Pairing,
    RationalTangle,
    RegionFill,
    RegularNeighborhood,
    TangleShape,
    TwoTwoAnnuli,
    is_incompressible,
    require_valid,
    validate_side,
)

from oracles import annulus_ok, two_two_ok

P12_34 = Pairing((0, 1), (2, 3))


def ib(t, *params):
    return RegionFill.ibundle(IBundleSpec(BundleType(t), params))


def test_pairing_must_partition():
    with pytest.raises(ValueError):
        Pairing((0, 1), (1, 2))
    assert len(set(ALL_PAIRINGS)) == 6
    assert {frozenset([p.pair_ab, p.pair_cd]) for p in ALL_PAIRINGS}.__len__() == 3


def test_essential_torus_pair_rejected():
    report = validate_side(NonsingularAnnulus(P12_34, 3, ACYLINDRICAL_FILL), SphereOrbifold([2, 2, 3, 4]))
    assert not report.ok
    assert "essential-torus" in report.codes()
    assert any("essential torus" in v.message for v in report.violations)


def test_nonsingular_annulus_ok():
    # pairs {2,3} and {2,4}
    report = validate_side(NonsingularAnnulus(P12_34, 5, ACYLINDRICAL_FILL), SphereOrbifold([2, 3, 2, 4]))
    assert report.ok and report.violations == ()


def test_two_two_forces_n_one():
    cfg = TwoTwoAnnuli(P12_34, 3, SOLID_TORUS_FILL, ACYLINDRICAL_FILL)
    report = validate_side(cfg, SphereOrbifold([2, 2, 3, 4]))
    assert "n-must-be-1" in report.codes()
    assert any("n must be 1" in v.message for v in report.violations)
    assert validate_side(dataclasses.replace(cfg, n=1), SphereOrbifold([2, 2, 3, 4])).ok


def test_two_two_symmetric_closure():
    # cd = {2,2} is accepted by reading the pairing the other way round
    cfg = TwoTwoAnnuli(P12_34, 1, ACYLINDRICAL_FILL, SOLID_TORUS_FILL)
    assert validate_side(cfg, SphereOrbifold([3, 4, 2, 2])).ok


def test_two_two_both_tori_rejected():
    cfg = TwoTwoAnnuli(P12_34, 1, SOLID_TORUS_FILL, SOLID_TORUS_FILL)
    assert not validate_side(cfg, SphereOrbifold([2, 2, 2, 2])).ok


def test_fill_boundary_checked():
    surface = SphereOrbifold([2, 3, 4, 5])
    assert validate_side(NonsingularAnnulus(P12_34, 3, ib("III", 2, 3, 4, 5)), surface).ok
    report = validate_side(NonsingularAnnulus(P12_34, 3, ib("III", 2, 3, 4, 6)), surface)
    assert report.codes() == {"fill-boundary"}
    cfg = TwoTwoAnnuli(Pairing((0, 2), (1, 3)), 2, ib("V", 2, 4), ib("V", 3, 5))
    assert validate_side(cfg, surface).ok
    assert not validate_side(dataclasses.replace(cfg, lower_fill=ib("V", 3, 4)), surface).ok


def test_solid_torus_only_for_twos():
    surface = SphereOrbifold([3, 4, 5, 6])
    assert not validate_side(NonsingularAnnulus(P12_34, 3, SOLID_TORUS_FILL), surface).ok
    assert not validate_side(TwoTwoAnnuli(P12_34, 2, SOLID_TORUS_FILL, ACYLINDRICAL_FILL), surface).ok


def test_core_label_and_n_ranges():
    surface = SphereOrbifold([3, 4, 5, 6])
    assert "core-label" in validate_side(NonsingularAnnulus(P12_34, 1, ACYLINDRICAL_FILL), surface).codes()
    assert "n-range" in validate_side(TwoTwoAnnuli(P12_34, 0, ACYLINDRICAL_FILL, ACYLINDRICAL_FILL), surface).codes()


def test_arity_reported_not_raised():
    report = validate_side(Acylindrical(), SphereOrbifold([3, 4, 5]))
    assert report.codes() == {"arity"}


def test_unconstrained_variants():
    for side in (Acylindrical(), RationalTangle(TangleShape.TWO_STRAND), RationalTangle(TangleShape.H_SHAPE)):
        assert validate_side(side, SphereOrbifold([2, 2, 2, 2])).ok


def test_regular_neighborhood_needs_double():
    assert validate_side(RegularNeighborhood(), SphereOrbifold([3, 3, 5, 5])).ok
    assert validate_side(RegularNeighborhood(), SphereOrbifold([3, 5, 3, 5])).ok
    assert not validate_side(RegularNeighborhood(), SphereOrbifold([3, 4, 5, 5])).ok


def test_require_valid_raises():
    with pytest.raises(InvalidSide) as info:
        require_valid(NonsingularAnnulus(P12_34, 3, ACYLINDRICAL_FILL), SphereOrbifold([2, 2, 3, 4]))
    assert "essential-torus" in info.value.report.codes()


@pytest.mark.parametrize("side0, side1, expected", [
    (Acylindrical(), Acylindrical(), True),
    (RationalTangle(TangleShape.TWO_STRAND), Acylindrical(), False),
    (TwoTwoAnnuli(P12_34, 2, ACYLINDRICAL_FILL, ACYLINDRICAL_FILL), RationalTangle(TangleShape.H_SHAPE), False),
    (Acylindrical(), RegularNeighborhood(), True),
])
def test_is_incompressible(side0, side1, expected):
    assert is_incompressible(side0, side1) is expected


def test_side_variants_are_exclusive():
    # one class per configuration; none carries both annulus kinds
    assert len(SIDE_TYPES) == 5
    fields = {cls: {f.name for f in dataclasses.fields(cls)} for cls in SIDE_TYPES}
    assert fields[NonsingularAnnulus] == {"pairing", "core_label", "region_fill"}
    assert fields[TwoTwoAnnuli] == {"pairing", "n", "upper_fill", "lower_fill"}
    for a, b in itertools.combinations(SIDE_TYPES, 2):
        assert not issubclass(a, b) and not issubclass(b, a)


def test_fill_predicate_matches_oracle_for_every_spec():
    specs = list(all_specs(6))
    for quad in itertools.combinations_with_replacement(range(2, 7), 4):
        surface = SphereOrbifold(quad)
        for pairing in ALL_PAIRINGS[:3]:
            for s in specs:
                cfg = NonsingularAnnulus(pairing, 3, RegionFill.ibundle(s))
                assert validate_side(cfg, surface).ok == annulus_ok(
                    quad, pairing.pair_ab, pairing.pair_cd, 3, cfg.region_fill)


perms = st.permutations(range(4))
quads = st.lists(st.integers(2, 7), min_size=4, max_size=4)
fills = st.sampled_from([ACYLINDRICAL_FILL, SOLID_TORUS_FILL, ib("V", 2, 3), ib("III", 2, 2, 3, 3), ib("IV", 3)])


@st.composite
def sides(draw):
    pairing = draw(st.sampled_from(ALL_PAIRINGS))
    if draw(st.booleans()):
        return NonsingularAnnulus(pairing, draw(st.integers(1, 6)), draw(fills))
    return TwoTwoAnnuli(pairing, draw(st.integers(0, 3)), draw(fills), draw(fills))


@given(quads, sides(), perms)
def test_validation_is_permutation_equivariant(quad, side, perm):
    surface = SphereOrbifold(quad)
    moved = dataclasses.replace(side, pairing=side.pairing.relabeled(perm))
    assert validate_side(side, surface).ok == validate_side(moved, surface.permuted(perm)).ok


@given(quads, sides())
def test_validation_matches_oracle(quad, side):
    p = side.pairing
    if isinstance(side, NonsingularAnnulus):
        expected = annulus_ok(quad, p.pair_ab, p.pair_cd, side.core_label, side.region_fill)
    else:
        expected = two_two_ok(quad, p.pair_ab, p.pair_cd, side.n, side.upper_fill, side.lower_fill)
    assert validate_side(side, SphereOrbifold(quad)).ok == expected
