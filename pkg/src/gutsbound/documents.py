"""
JSON problem documents and reports.

Marked points are numbered 1..4 in documents (``"pairing": [[1, 2], [3, 4]]``)
and converted to 0-based positions on load.
"""
from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any

import jsonschema

from .core import GutsboundError, MirroredDiskOrbifold, SphereOrbifold, format_fraction
from .engine import Compressible, GutsContribution, VolumeBound
from .ibundles import BundleType, IBundleSpec
from .splitting import (
    Acylindrical,
    FillKind,
    NonsingularAnnulus,
    Pairing,
    RationalTangle,
    RegionFill,
    RegularNeighborhood,
    Side,
    TangleShape,
    TwoTwoAnnuli,
)
from .tangle import HungryForm, TangleWord, cycle_notation

ATTESTATIONS = ("irreducible", "turnover_reduced", "atoroidal_sides", "hyperbolic_interior")

_LABELS = {"type": "array", "items": {"type": "integer"}}
_PAIR = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

_FILL = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": [k.value for k in FillKind]},
        "type": {"enum": [t.value for t in BundleType]},
        "params": _LABELS,
    },
    "additionalProperties": False,
}

_SIDE = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["acylindrical", "rational_tangle", "nonsingular_annulus",
                          "two_two_annuli", "regular_neighborhood"]},
        "shape": {"enum": [s.value for s in TangleShape]},
        "pairing": {"type": "array", "items": _PAIR, "minItems": 2, "maxItems": 2},
        "core_label": {"type": "integer"},
        "n": {"type": "integer"},
        "fill": _FILL,
        "upper_fill": _FILL,
        "lower_fill": _FILL,
    },
    "additionalProperties": False,
}

PROBLEM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "gutsbound problem document",
    "type": "object",
    "required": ["surface", "side0", "attestations"],
    "properties": {
        "surface": {
            "type": "object",
            "required": ["type", "labels"],
            "properties": {"type": {"enum": ["sphere", "mirrored_disk"]}, "labels": _LABELS},
            "additionalProperties": False,
        },
        "side0": _SIDE,
        "side1": _SIDE,
        "sigma": {"type": "string"},
        "side1_labels": _LABELS,
        "attestations": {
            "type": "object",
            "required": list(ATTESTATIONS),
            "properties": {name: {"type": "boolean"} for name in ATTESTATIONS},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}


class DocumentError(GutsboundError):
    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


@dataclasses.dataclass(frozen=True)
class ProblemDocument:
    surface: SphereOrbifold | MirroredDiskOrbifold
    side0: Side
    side1: Side | None
    sigma: TangleWord | None
    attestations: dict[str, bool]
    side1_labels: tuple[int, ...] | None = None


# -- sides --------------------------------------------------------------------

def fill_from_json(data: dict) -> RegionFill:
    kind = FillKind(data["kind"])
    if kind is FillKind.IBUNDLE:
        if "type" not in data or "params" not in data:
            raise DocumentError(["an ibundle fill needs 'type' and 'params'"])
        return RegionFill.ibundle(IBundleSpec(BundleType(data["type"]), tuple(data["params"])))
    return RegionFill(kind)


def fill_to_json(fill: RegionFill) -> dict:
    if fill.kind is FillKind.IBUNDLE:
        return {"kind": "ibundle", "type": fill.spec.type_id.value, "params": list(fill.spec.params)}
    return {"kind": fill.kind.value}


def _pairing_from_json(data) -> Pairing:
    ab, cd = data
    return Pairing(tuple(i - 1 for i in ab), tuple(i - 1 for i in cd))


def _pairing_to_json(p: Pairing) -> list[list[int]]:
    return [[i + 1 for i in p.pair_ab], [i + 1 for i in p.pair_cd]]


def _need(data: dict, *keys: str) -> None:
    missing = [k for k in keys if k not in data]
    if missing:
        raise DocumentError([f"side '{data['kind']}' is missing {', '.join(missing)}"])


def side_from_json(data: dict) -> Side:
    kind = data["kind"]
    if kind == "acylindrical":
        return Acylindrical()
    if kind == "regular_neighborhood":
        return RegularNeighborhood()
    if kind == "rational_tangle":
        return RationalTangle(TangleShape(data.get("shape", "two_strand")))
    if kind == "nonsingular_annulus":
        _need(data, "pairing", "core_label", "fill")
        return NonsingularAnnulus(_pairing_from_json(data["pairing"]), data["core_label"],
                                  fill_from_json(data["fill"]))
    _need(data, "pairing", "n", "upper_fill", "lower_fill")
    return TwoTwoAnnuli(_pairing_from_json(data["pairing"]), data["n"],
                        fill_from_json(data["upper_fill"]), fill_from_json(data["lower_fill"]))


def side_to_json(side: Side) -> dict:
    if isinstance(side, Acylindrical):
        return {"kind": "acylindrical"}
    if isinstance(side, RegularNeighborhood):
        return {"kind": "regular_neighborhood"}
    if isinstance(side, RationalTangle):
        return {"kind": "rational_tangle", "shape": side.shape.value}
    if isinstance(side, NonsingularAnnulus):
        return {"kind": "nonsingular_annulus", "pairing": _pairing_to_json(side.pairing),
                "core_label": side.core_label, "fill": fill_to_json(side.region_fill)}
    return {"kind": "two_two_annuli", "pairing": _pairing_to_json(side.pairing), "n": side.n,
            "upper_fill": fill_to_json(side.upper_fill), "lower_fill": fill_to_json(side.lower_fill)}


def surface_to_json(surface) -> dict:
    if isinstance(surface, MirroredDiskOrbifold):
        return {"type": "mirrored_disk", "labels": [surface.n1, surface.n2]}
    return {"type": "sphere", "labels": list(surface.cone_orders)}


# -- documents ----------------------------------------------------------------

def parse_document(data: Any) -> ProblemDocument:
    """Validate against the schema and build domain objects; raises DocumentError."""
    errors = sorted(jsonschema.Draft202012Validator(PROBLEM_SCHEMA).iter_errors(data),
                    key=lambda e: [str(p) for p in e.absolute_path])
    if errors:
        raise DocumentError([f"{'/'.join(map(str, e.absolute_path)) or '<root>'}: {e.message}"
                             for e in errors])
    try:
        surf = data["surface"]
        if surf["type"] == "sphere":
            surface = SphereOrbifold(surf["labels"])
        else:
            if len(surf["labels"]) != 2:
                raise DocumentError(["a mirrored disk has exactly two cone labels"])
            surface = MirroredDiskOrbifold(*surf["labels"])
        side0 = side_from_json(data["side0"])
        side1 = side_from_json(data["side1"]) if "side1" in data else None
        sigma = TangleWord.parse(data["sigma"]) if "sigma" in data else None
        side1_labels = tuple(data["side1_labels"]) if "side1_labels" in data else None
    except DocumentError:
        raise
    except (GutsboundError, ValueError) as exc:
        raise DocumentError([str(exc)]) from exc
    attestations = dict(data["attestations"])
    refused = [name for name in ATTESTATIONS if not attestations[name]]
    if refused:
        raise DocumentError([f"hypothesis not attested: {name}" for name in refused])
    return ProblemDocument(surface, side0, side1, sigma, attestations, side1_labels)


def load_document(text: str) -> ProblemDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError([f"not valid JSON: {exc}"]) from exc
    return parse_document(data)


# -- reports ------------------------------------------------------------------

@dataclasses.dataclass
class Report:
    outcome: str                      # bound, hungry, compressible, invalid
    theorem_case: int | None = None
    corollary_case: int | None = None
    coefficient: str | None = None    # "p/q"
    numeric_value: float | None = None
    violations: list[str] = dataclasses.field(default_factory=list)
    witness: dict | None = None

    @property
    def exit_code(self) -> int:
        return {"bound": 0, "hungry": 0, "compressible": 2}.get(self.outcome, 3)

    def coefficient_fraction(self) -> Fraction | None:
        return None if self.coefficient is None else Fraction(self.coefficient)

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls(**json.loads(text))

    def to_text(self) -> str:
        rows = [("outcome", self.outcome)]
        for name in ("theorem_case", "corollary_case", "coefficient"):
            value = getattr(self, name)
            if value is not None:
                rows.append((name, str(value)))
        if self.numeric_value is not None:
            rows.append(("numeric_value", repr(self.numeric_value)))
        for v in self.violations:
            rows.append(("violation", v))
        if self.witness:
            for key in sorted(self.witness):
                rows.append((key, json.dumps(self.witness[key], sort_keys=True)))
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _contribution_json(c: GutsContribution) -> dict:
    return {"kind": c.kind.value, "coefficient": format_fraction(c.coefficient),
            "pairs": [list(p) for p in c.pairs]}


def hungry_witness(form: HungryForm) -> dict:
    return {
        "surface": surface_to_json(form.surface),
        "side0": side_to_json(form.side0),
        "side1": side_to_json(form.side1),
        "sigma": str(form.gluing.sigma),
        "permutation": cycle_notation(form.gluing.induced_permutation),
        "boundary0": list(form.boundary0),
        "boundary1": list(form.boundary1),
    }


def report_outcome(outcome, digits: int = 6) -> Report:
    if isinstance(outcome, VolumeBound):
        return Report(
            "bound", outcome.theorem_case, outcome.corollary_case,
            format_fraction(outcome.coefficient), round(outcome.numeric_value, digits),
            witness={"contributions": [_contribution_json(c) for c in outcome.contributions]})
    if isinstance(outcome, HungryForm):
        return Report("hungry", witness=hungry_witness(outcome))
    if isinstance(outcome, Compressible):
        return Report("compressible", violations=[outcome.reason])
    raise TypeError(f"not an outcome: {outcome!r}")


def hungry_from_witness(witness: dict) -> HungryForm:
    """Rebuild a hungry form from the witness block of a report."""
    from .tangle import assemble_hungry

    surf = witness["surface"]
    if surf["type"] == "mirrored_disk":
        surface = MirroredDiskOrbifold(*surf["labels"])
    else:
        surface = SphereOrbifold(surf["labels"])
    return assemble_hungry(surface, side_from_json(witness["side0"]), side_from_json(witness["side1"]),
                           TangleWord.parse(witness["sigma"]), witness["boundary1"])
