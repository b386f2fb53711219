"""JSON system configs: ``{"name": "A3"}`` or ``{"matrix": [[1, 3], [3, 1]]}``.

Matrix entries are integers with 0 standing for INF.  Optional keys:
``"generators"`` (list of names) and ``"engine"`` (``"word"`` or
``"permutation"``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import INF, WORD, CoxeterError, CoxeterSystem, family_matrix

_KEYS = {"name", "matrix", "generators", "engine"}


@dataclass
class Limits:
    max_word_length: int = 24
    max_closure_size: int = 10**6
    max_vertices: int = 10**6
    max_paths: int | None = None


@dataclass
class RunConfig:
    system_path: str
    probs_path: str | None = None
    radius: int | None = None
    steps: int | None = None
    out: str | None = None
    format: str | None = None
    limits: Limits = field(default_factory=Limits)


def system_from_dict(spec: dict, limits: Limits | None = None) -> CoxeterSystem:
    limits = limits or Limits()
    if not isinstance(spec, dict):
        raise CoxeterError("system config must be a JSON object")
    extra = set(spec) - _KEYS
    if extra:
        raise CoxeterError(f"unknown system config keys {sorted(extra)}")
    if ("name" in spec) == ("matrix" in spec):
        raise CoxeterError('system config needs exactly one of "name" or "matrix"')
    if "name" in spec:
        matrix = family_matrix(str(spec["name"]))
        label = str(spec["name"])
    else:
        raw = spec["matrix"]
        if not (isinstance(raw, list) and all(isinstance(r, list) for r in raw)):
            raise CoxeterError("matrix must be a list of lists")
        if any(not isinstance(m, int) or isinstance(m, bool) for r in raw for m in r):
            raise CoxeterError("matrix entries must be integers (0 for INF)")
        matrix = [[INF if m == 0 else m for m in r] for r in raw]
        label = None
    return CoxeterSystem(matrix, spec.get("generators"), spec.get("engine", WORD),
                         max_word_length=limits.max_word_length,
                         max_closure_size=limits.max_closure_size, label=label)


def load_system(path, limits: Limits | None = None) -> CoxeterSystem:
    with open(path) as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CoxeterError(f"{path}: invalid JSON ({exc})") from None
    return system_from_dict(spec, limits)
