"""
The six orbifold I-bundles over a 3-ball with four boundary cone points.

Each bundle is (F x [-1,1]) / ((x,y) ~ (phi(x), -y)) for an orientable base F
and an involution phi:

    I    F = S2(a,a,b,b), phi a reflection swapping like-labeled points
    II   F = S2(a,a,b,c), phi a reflection fixing b, c and swapping the a's
    III  F = S2(a,b,c,d), phi a reflection fixing all four points
    IV   F = D2(a,a),     phi a reflection swapping the two points
    V    F = D2(a,b),     phi a reflection fixing both points
    VI   F = D2(a,b),     phi the identity (product bundle)

Parameters are stored in a canonical order so that equal bundles compare
equal: I, V, VI sort (a, b); II keeps a first and sorts (b, c); III sorts all.
"""
from __future__ import annotations

import dataclasses
import enum
import functools
import itertools
from typing import Iterator

from .core import ConeLabel, SphereOrbifold, check_label


class BundleType(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"


ARITY = {
    BundleType.I: 2,
    BundleType.II: 3,
    BundleType.III: 4,
    BundleType.IV: 1,
    BundleType.V: 2,
    BundleType.VI: 2,
}


def _canonical_params(type_id: BundleType, params: tuple[int, ...]) -> tuple[int, ...]:
    if type_id is BundleType.II:
        return (params[0],) + tuple(sorted(params[1:]))
    return tuple(sorted(params))


@dataclasses.dataclass(frozen=True)
class IBundleSpec:
    type_id: BundleType
    params: tuple[ConeLabel, ...]

    def __post_init__(self):
        type_id = BundleType(self.type_id)
        params = tuple(check_label(p) for p in self.params)
        if len(params) != ARITY[type_id]:
            raise ValueError(
                f"type {type_id.value} takes {ARITY[type_id]} parameters, got {len(params)}")
        object.__setattr__(self, "type_id", type_id)
        object.__setattr__(self, "params", _canonical_params(type_id, params))

    def __str__(self) -> str:
        return f"{self.type_id.value}({','.join(map(str, self.params))})"


@functools.lru_cache(maxsize=None)
def _boundary(spec: IBundleSpec) -> tuple[int, ...]:
    t, p = spec.type_id, spec.params
    if t is BundleType.I or t is BundleType.VI:
        a, b = p
        labels = (a, a, b, b)
    elif t is BundleType.II:
        a, b, c = p
        labels = (a, a, b, c)
    elif t is BundleType.III:
        labels = p
    elif t is BundleType.IV:
        (a,) = p
        labels = (a, a, 2, 2)
    else:
        a, b = p
        labels = (a, b, 2, 2)
    return tuple(sorted(labels))


def boundary_labels(spec: IBundleSpec) -> tuple[int, ...]:
    """Sorted boundary cone orders; cached, cheaper than building the orbifold."""
    return _boundary(spec)


def boundary_cone_multiset(spec: IBundleSpec) -> SphereOrbifold:
    """
    Cone points on the boundary sphere of the bundle.

    Closed bases with a reflection (I-III) give one copy of F. Disk bases with
    a reflection (IV, V) add two order-2 points where the fixed arc of phi
    meets the boundary circle. The product (VI) is the double of F.

    >>> boundary_cone_multiset(IBundleSpec(BundleType.IV, (4,))).canonical
    (2, 2, 4, 4)
    """
    return SphereOrbifold(_boundary(spec))


def all_specs(param_bound: int) -> Iterator[IBundleSpec]:
    """Every canonical spec with all parameters in [2, param_bound]."""
    labels = range(2, param_bound + 1)
    for t in BundleType:
        if t is BundleType.II:
            for a in labels:
                for b, c in itertools.combinations_with_replacement(labels, 2):
                    yield IBundleSpec(t, (a, b, c))
        else:
            for params in itertools.combinations_with_replacement(labels, ARITY[t]):
                yield IBundleSpec(t, params)


def compatible_fills(required: SphereOrbifold, param_bound: int) -> list[IBundleSpec]:
    """All bundles with parameters <= param_bound whose boundary is ``required``."""
    if param_bound < 2:
        raise ValueError("param_bound must be at least 2")
    if len(required) != 4:
        return []
    target = required.canonical
    return [s for s in all_specs(param_bound) if tuple(sorted(_boundary(s))) == target]


@dataclasses.dataclass(frozen=True)
class SingularSummary:
    """
    Combinatorial shape of the singular locus inside a bundle.

    circles   labels of closed loops carrying no vertex
    arcs      labels of edges joining two boundary points
    legs      labels of edges joining a boundary point to a vertex
    vertices  label triples at trivalent vertices
    links     number of order-2 edges joining two vertices
    """
    circles: tuple[int, ...] = ()
    arcs: tuple[int, ...] = ()
    legs: tuple[int, ...] = ()
    vertices: tuple[tuple[int, int, int], ...] = ()
    links: int = 0

    def boundary_endpoints(self) -> tuple[int, ...]:
        return tuple(sorted(self.arcs * 2 + self.legs))


def interior_singular_description(spec: IBundleSpec) -> SingularSummary:
    t, p = spec.type_id, spec.params
    if t is BundleType.I:
        a, b = p
        # the fixed great circle becomes an order-2 loop
        return SingularSummary(circles=(2,), arcs=(a, b))
    if t is BundleType.II:
        a, b, c = p
        return SingularSummary(arcs=(a,), legs=(b, c),
                               vertices=((b, 2, 2), (c, 2, 2)), links=2)
    if t is BundleType.III:
        return SingularSummary(legs=p, vertices=tuple((x, 2, 2) for x in p), links=4)
    if t is BundleType.IV:
        (a,) = p
        # fixed diameter of the disk becomes an order-2 arc
        return SingularSummary(arcs=(a, 2))
    if t is BundleType.V:
        a, b = p
        return SingularSummary(legs=(a, b, 2, 2), vertices=((a, 2, 2), (b, 2, 2)), links=1)
    a, b = p
    return SingularSummary(arcs=(a, b))
