"""JSON function-spec files.

Two shapes are accepted::

    {"family": {"name": "sharp_single", "alpha": 1.0, "n": 2}}
    {"alpha": 1.0, "h": [[0, 0], [1, 0], [0.25, 0]], "g": [[0, 0], [0, 0], [0.1, 0]]}

Coefficient lists are ``[re, im]`` pairs indexed from degree 0. ``alpha``
is optional in the second form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

from .errors import HarmwError, SpecFileError
from .extremal import FamilySpec
from .harmonic import HarmonicMap
from .series import AnalyticSeries


@dataclass(frozen=True)
class FunctionSpec:
    family: Optional[FamilySpec] = None
    alpha: Optional[float] = None
    h: Optional[tuple[complex, ...]] = None
    g: Optional[tuple[complex, ...]] = None

    def build(self) -> HarmonicMap:
        if self.family is not None:
            return self.family.build()
        return HarmonicMap(AnalyticSeries.from_list(self.h), AnalyticSeries.from_list(self.g))

    @property
    def default_alpha(self) -> Optional[float]:
        if self.family is not None:
            return self.family.alpha
        return self.alpha

    def to_dict(self) -> dict[str, Any]:
        if self.family is not None:
            return {"family": self.family.to_dict()}
        d: dict[str, Any] = {
            "h": [[c.real, c.imag] for c in self.h],
            "g": [[c.real, c.imag] for c in self.g],
        }
        if self.alpha is not None:
            d["alpha"] = self.alpha
        return d

    @classmethod
    def from_map(cls, f: HarmonicMap, alpha: Optional[float] = None) -> "FunctionSpec":
        return cls(alpha=alpha, h=tuple(complex(c) for c in f.h.coeffs), g=tuple(complex(c) for c in f.g.coeffs))


def _coeff_list(value: Any, field: str) -> tuple[complex, ...]:
    if not isinstance(value, list) or not value:
        raise SpecFileError(f"field {field!r}: expected a non-empty list of [re, im] pairs")
    out = []
    for i, pair in enumerate(value):
        ok = (
            isinstance(pair, list)
            and len(pair) == 2
            and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        )
        if not ok:
            raise SpecFileError(f"field {field!r}, entry {i}: expected [re, im] numbers, got {pair!r}")
        out.append(complex(float(pair[0]), float(pair[1])))
    return tuple(out)


def parse_spec(data: Any) -> FunctionSpec:
    """Validate a decoded JSON document; also checks that it builds a valid map."""
    if not isinstance(data, dict):
        raise SpecFileError("top level: expected a JSON object")
    try:
        if "family" in data:
            extra = set(data) - {"family"}
            if extra:
                raise SpecFileError(f"top level: unexpected field(s) next to 'family': {', '.join(sorted(extra))}")
            if not isinstance(data["family"], dict):
                raise SpecFileError("field 'family': expected an object")
            spec = FunctionSpec(family=FamilySpec.from_dict(data["family"]))
        else:
            extra = set(data) - {"alpha", "h", "g"}
            if extra:
                raise SpecFileError(f"top level: unknown field(s): {', '.join(sorted(extra))}")
            for key in ("h", "g"):
                if key not in data:
                    raise SpecFileError(f"top level: missing field {key!r}")
            alpha = data.get("alpha")
            if alpha is not None and (isinstance(alpha, bool) or not isinstance(alpha, (int, float))):
                raise SpecFileError("field 'alpha': expected a number")
            spec = FunctionSpec(
                alpha=None if alpha is None else float(alpha),
                h=_coeff_list(data["h"], "h"),
                g=_coeff_list(data["g"], "g"),
            )
        spec.build()
    except SpecFileError:
        raise
    except HarmwError as exc:
        raise SpecFileError(str(exc)) from exc
    return spec


def loads(text: str) -> FunctionSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_spec(data)


def dumps(spec: FunctionSpec) -> str:
    return json.dumps(spec.to_dict(), sort_keys=True, indent=2)


def load(path: Union[str, Path]) -> FunctionSpec:
    return loads(Path(path).read_text())


def dump(spec: FunctionSpec, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(spec) + "\n")
