"""Input specifications: a lattice, a power and optional hand-picked representatives."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

import jsonschema

from .enumeration import safe_c_bound
from .exactmath import as_fraction
from .lattice import Lattice, LatticeError, Vector

_RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*-?\d+\s*(/\s*\d+\s*)?$"},
    ]
}
_VECTOR = {"type": "array", "items": _RATIONAL, "minItems": 1}

SPEC_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Lattice specification",
    "type": "object",
    "required": ["gram", "power"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "gram": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}, "minItems": 1},
        "power": {"type": "integer", "minimum": 1},
        "alpha_reps": {"type": "array", "items": _VECTOR},
        "beta_reps": {"type": "array", "items": _VECTOR},
        "c_bound": _RATIONAL,
        "c_bound_override": {"type": "boolean"},
        "max_sum": {"type": "integer", "minimum": 0},
        "truncation": _RATIONAL,
        "n_max": {"type": "integer", "minimum": 0},
    },
}


class SpecError(ValueError):
    """The specification is malformed or inconsistent."""


@dataclass
class LatticeSpec:
    """A validated specification.

    ``alpha_reps`` is a full system of representatives of L#/L; the ones
    failing the filter power * Q(alpha) in Z are dropped by
    :attr:`alphas`.  ``beta_reps`` represents (L# + L/power)/L#.
    ``n_max`` optionally restricts the index set to n <= n_max, which is
    enough to certify independence but not to certify relations.
    """

    gram: list[list[int]]
    power: int
    name: str = "lattice"
    alpha_reps: list[Vector] = field(default_factory=list)
    beta_reps: list[Vector] = field(default_factory=list)
    c_bound: Fraction | None = None
    max_sum: int = 10
    truncation: Fraction = Fraction(10)
    n_max: int | None = None

    def __post_init__(self):
        try:
            self.lattice = Lattice(self.gram)
        except LatticeError as exc:
            raise SpecError(str(exc)) from None
        lat = self.lattice
        if self.power < 1 or lat.level % self.power:
            raise SpecError(f"power {self.power} must divide the level {lat.level}")
        try:
            if self.alpha_reps:
                self.alpha_reps = lat.check_alpha_reps(self.alpha_reps)
            else:
                self.alpha_reps = lat.dual_coset_reps()
            if self.beta_reps:
                self.beta_reps = lat.check_beta_reps(self.beta_reps, self.power)
            else:
                self.beta_reps = lat.beta_reps(self.power)
        except (LatticeError, TypeError, ValueError) as exc:
            raise SpecError(str(exc)) from None
        safe = safe_c_bound(lat)
        if self.c_bound is None:
            self.c_bound = safe

    @property
    def alphas(self) -> list[Vector]:
        return [a for a in self.alpha_reps if self.lattice.validate_alpha(a, self.power)]

    @property
    def labels(self) -> list[tuple[Vector, Vector]]:
        return [(a, b) for a in self.alphas for b in self.beta_reps]

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "gram": [list(r) for r in self.gram],
            "power": self.power,
            "alpha_reps": [[str(x) for x in v] for v in self.alpha_reps],
            "beta_reps": [[str(x) for x in v] for v in self.beta_reps],
            "c_bound": str(self.c_bound),
            "c_bound_override": self.c_bound != safe_c_bound(self.lattice),
            "max_sum": self.max_sum,
            "truncation": str(self.truncation),
        }
        if self.n_max is not None:
            out["n_max"] = self.n_max
        return out


def spec_from_dict(data: dict) -> LatticeSpec:
    try:
        jsonschema.validate(data, SPEC_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SpecError(f"invalid spec: {exc.message}") from None
    c = data.get("c_bound")
    if c is not None:
        c = as_fraction(str(c).replace(" ", ""))
        lat = _lattice_or_error(data["gram"])
        if c < safe_c_bound(lat) and not data.get("c_bound_override", False):
            raise SpecError(f"c_bound {c} is below the certified bound {safe_c_bound(lat)}; "
                            "set c_bound_override to use it anyway")
        if c <= 0:
            raise SpecError("c_bound must be positive")
    return LatticeSpec(
        gram=data["gram"],
        power=data["power"],
        name=data.get("name", "lattice"),
        alpha_reps=[_rvec(v) for v in data.get("alpha_reps", [])],
        beta_reps=[_rvec(v) for v in data.get("beta_reps", [])],
        c_bound=c,
        max_sum=data.get("max_sum", 10),
        truncation=as_fraction(str(data.get("truncation", 10)).replace(" ", "")),
        n_max=data.get("n_max"),
    )


def _lattice_or_error(gram) -> Lattice:
    try:
        return Lattice(gram)
    except LatticeError as exc:
        raise SpecError(str(exc)) from None


def _rvec(v) -> Vector:
    return tuple(as_fraction(str(x).replace(" ", "")) for x in v)


def load_spec(path: str | Path) -> LatticeSpec:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    return spec_from_dict(data)


# ---------------------------------------------------------------------------
# built-in examples with hand-picked representatives

_H, _T1, _T2, _Q = "1/2", "1/3", "2/3", "1/4"

BUILTIN: dict[str, dict] = {
    "D4": {
        "name": "D4",
        "gram": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
        "power": 2,
        "alpha_reps": [[0, 0, 0, 0], [0, 0, _H, _H], [_H, 0, 0, _H], [_H, 0, _H, 0]],
        "beta_reps": [[0, 0, 0, 0], [_H, _H, _H, _H], [_H, 0, 0, 0], [0, _H, 0, 0]],
    },
    "A2": {
        "name": "A2",
        "gram": [[2, -1], [-1, 2]],
        "power": 3,
        "alpha_reps": [[0, 0], [_T2, _T1], [_T1, _T2]],
        "beta_reps": [[0, 0], [_T1, _T1], [_T2, _T2]],
    },
    "A3": {
        "name": "A3",
        "gram": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
        "power": 2,
        "alpha_reps": [[0, 0, 0], [_H, 0, _H], ["3/4", _H, _Q], [_Q, _H, "3/4"]],
        "beta_reps": [[0, 0, 0], [0, _H, 0], [_H, 0, 0], [_H, _H, 0]],
    },
    "2A2": {
        "name": "2A2",
        "gram": [[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, -1], [0, 0, -1, 2]],
        "power": 3,
        "alpha_reps": [[a, b, c, d] for a, b in ((0, 0), (_T2, _T1), (_T1, _T2))
                       for c, d in ((0, 0), (_T2, _T1), (_T1, _T2))],
        "beta_reps": [[a, a, c, c] for a in (0, _T1, _T2) for c in (0, _T1, _T2)],
    },
    "Q15-cube": {
        "name": "Q15-cube",
        "gram": [[2, 1], [1, 8]],
        "power": 3,
        "alpha_reps": [[f"{v}/15", f"{(13 * v) % 15}/15"] for v in range(15)],
        "beta_reps": [[0, 0], [_T1, 0], [_T2, 0]],
        "max_sum": 30,
        "n_max": 2,
    },
    "Q15-fifth": {
        "name": "Q15-fifth",
        "gram": [[2, 1], [1, 8]],
        "power": 5,
        "alpha_reps": [[f"{v}/15", f"{(13 * v) % 15}/15"] for v in range(15)],
        "beta_reps": [[f"{v}/5", 0] for v in range(5)],
        "max_sum": 50,
        "n_max": 4,
    },
}


def builtin_spec(name: str) -> LatticeSpec:
    if name not in BUILTIN:
        raise SpecError(f"unknown built-in spec {name!r}; choose from {', '.join(BUILTIN)}")
    return spec_from_dict(BUILTIN[name])
