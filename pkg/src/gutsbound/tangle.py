"""
Rational tangle operations on the sphere with four marked points.

A tangle operation is recorded as a word in the half-twists s1, s2, s3, where
s_i exchanges marked points i and i+1 (points numbered 1..4 in word syntax).
Only the word and the permutation it induces on the marked points are
modeled; braid relations are not applied.

Permutations are tuples ``p`` on positions 0..3 with ``p[i]`` the image of
point i. Words act left to right: the first letter moves the points first.
"""
from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence, Union

from .core import GutsboundError, MirroredDiskOrbifold, SphereOrbifold, double_of_mirrored_disk
from .splitting import RegularNeighborhood, Side, require_valid

IDENTITY = (0, 1, 2, 3)

Letter = tuple[int, int]  # (generator 1..3, exponent +1 or -1)

_TOKEN = re.compile(r"^s([123])('?)$")


class TangleError(GutsboundError):
    pass


class NotEmptyGuts(TangleError):
    pass


class LabelMismatch(TangleError):
    pass


@dataclasses.dataclass(frozen=True)
class TangleWord:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(g), int(e)) for g, e in self.letters)
        for g, e in letters:
            if g not in (1, 2, 3) or e not in (1, -1):
                raise TangleError(f"bad letter {(g, e)}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> TangleWord:
        """
        >>> TangleWord.parse("s1 s2' s3").letters
        ((1, 1), (2, -1), (3, 1))
        """
        letters = []
        for token in text.split():
            m = _TOKEN.match(token)
            if m is None:
                raise TangleError(f"unrecognized tangle letter {token!r}")
            letters.append((int(m.group(1)), -1 if m.group(2) else 1))
        return cls(tuple(letters))

    def __str__(self) -> str:
        return " ".join(f"s{g}" + ("'" if e < 0 else "") for g, e in self.letters)

    def __mul__(self, other: TangleWord) -> TangleWord:
        return TangleWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> TangleWord:
        return TangleWord(tuple((g, -e) for g, e in reversed(self.letters)))


def reduce(w: TangleWord) -> TangleWord:
    """Cancel adjacent inverse letters until none remain."""
    stack: list[Letter] = []
    for g, e in w.letters:
        if stack and stack[-1] == (g, -e):
            stack.pop()
        else:
            stack.append((g, e))
    return TangleWord(tuple(stack))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """First ``p``, then ``q``."""
    return tuple(q[p[i]] for i in range(len(p)))


def invert(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _transposition(g: int) -> tuple[int, ...]:
    perm = list(IDENTITY)
    perm[g - 1], perm[g] = perm[g], perm[g - 1]
    return tuple(perm)


def induced_permutation(w: TangleWord) -> tuple[int, ...]:
    """
    Permutation of the marked points traced out by the word.

    >>> induced_permutation(TangleWord.parse("s1 s2 s1"))
    (2, 1, 0, 3)
    """
    perm = IDENTITY
    for g, _ in w.letters:
        perm = compose(perm, _transposition(g))
    return perm


def cycle_notation(p: Sequence[int]) -> str:
    """
    1-based cycles, fixed points omitted, ``()`` for the identity.

    >>> cycle_notation((2, 1, 0, 3))
    '(1 3)'
    """
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle = []
        i = start
        while i not in seen:
            seen.add(i)
            cycle.append(str(i + 1))
            i = p[i]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) or "()"


@dataclasses.dataclass(frozen=True)
class GluingRecord:
    sigma: TangleWord
    induced_permutation: tuple[int, ...]

    @classmethod
    def of(cls, sigma: TangleWord) -> GluingRecord:
        return cls(sigma, induced_permutation(sigma))

    def __eq__(self, other: object) -> bool:
        # words are compared after free reduction
        if not isinstance(other, GluingRecord):
            return NotImplemented
        return (reduce(self.sigma) == reduce(other.sigma)
                and self.induced_permutation == other.induced_permutation)

    def __hash__(self) -> int:
        return hash((reduce(self.sigma), self.induced_permutation))


SurfaceType = Union[SphereOrbifold, MirroredDiskOrbifold]


@dataclasses.dataclass(frozen=True)
class HungryForm:
    """An orbifold with empty guts: Q0 glued to Q1 along the isotopy cylinder of sigma."""
    surface: SurfaceType
    side0: Side
    side1: Side
    gluing: GluingRecord
    boundary0: tuple[int, ...]
    boundary1: tuple[int, ...]

    @property
    def surface_type(self) -> str:
        return "sphere" if isinstance(self.surface, SphereOrbifold) else "mirrored_disk"


def assemble_hungry(surface: SurfaceType, side0: Side, side1: Side | None, sigma: TangleWord,
                    side1_boundary: Iterable[int] | None = None) -> HungryForm:
    """
    Build the gluing Q0 u_sigma Q1 for two sides with empty guts.

    ``side1_boundary`` gives the labels of the marked points as seen from Q1;
    it must be the surface labels carried along by sigma. When omitted, the
    carried labels are used. For a mirrored disk, Q1 is its regular
    neighborhood and the surface seen from Q0 is S2(n1,n1,n2,n2).
    """
    from .engine import guts_contribution, GutsKind

    if isinstance(surface, MirroredDiskOrbifold):
        boundary0 = double_of_mirrored_disk(surface)
        if side1 is None:
            side1 = RegularNeighborhood()
        if not isinstance(side1, RegularNeighborhood):
            raise TangleError("the second side of a mirrored disk is its regular neighborhood")
    else:
        boundary0 = surface
        if side1 is None:
            raise TangleError("a sphere splitting needs two sides")
    perm = induced_permutation(sigma)
    carried = boundary0.permuted(perm)
    boundary1 = carried if side1_boundary is None else SphereOrbifold(side1_boundary)
    if boundary1.cone_orders != carried.cone_orders:
        raise LabelMismatch(
            f"side 1 boundary {boundary1.cone_orders} is not {boundary0.cone_orders} "
            f"carried by {cycle_notation(perm)}")
    require_valid(side0, boundary0)
    require_valid(side1, boundary1)
    for name, side, boundary in (("side 0", side0, boundary0), ("side 1", side1, boundary1)):
        contribution = guts_contribution(side, boundary)
        if contribution.kind is not GutsKind.EMPTY:
            raise NotEmptyGuts(f"{name} contributes {contribution.kind.value} guts")
    return HungryForm(surface, side0, side1, GluingRecord.of(sigma),
                      boundary0.cone_orders, boundary1.cone_orders)


def resplit(form: HungryForm) -> tuple[Side, Side]:
    """
    Cut a hungry form back along the surface.

    The two pieces are re-validated against the boundaries recomputed from
    the surface and the gluing, then returned as (side0, side1).
    """
    if isinstance(form.surface, MirroredDiskOrbifold):
        boundary0 = double_of_mirrored_disk(form.surface)
    else:
        boundary0 = form.surface
    boundary1 = boundary0.permuted(form.gluing.induced_permutation)
    if boundary0.cone_orders != form.boundary0 or boundary1.cone_orders != form.boundary1:
        raise LabelMismatch("stored boundaries disagree with the surface and gluing")
    return require_valid(form.side0, boundary0), require_valid(form.side1, boundary1)
