"""Body specifications, generators and JSON helpers.

A body file is a JSON object with a ``kind``:

=============  ==============================================  =========
kind           parameters                                      result
=============  ==============================================  =========
polygon        ``vertices``: list of [x, y]                    planar
circle         ``radius`` (default 1), ``samples``             planar
ellipse        ``a >= b > 0``, ``samples``                     planar
polytope       ``vertices``: list of [x, y, z]                 spatial
icosphere      ``radius`` (default 1), ``subdivisions``        spatial
ellipsoid3     ``axes``: [a, b, c], ``subdivisions``           spatial
cube           ``side`` (default 2)                            spatial
=============  ==============================================  =========

Smooth kinds need ``samples >= 16``.  Files carrying just ``vertices`` (for
instance the output of ``blaschke ngon``) are read as polygons or, with
three coordinates per point, as polytopes.  ``ellipsoid`` is accepted for
``ellipsoid3``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .geom2d import ConvexPolyline2
from .space3d import ConvexPolytope3, cube, icosphere

PLANAR = ("polygon", "circle", "ellipse")
SPATIAL = ("polytope", "icosphere", "ellipsoid3", "cube")


class SpecError(ValueError):
    """Malformed input; the message starts with the offending field path."""


def _number(obj, key, path, default=None, positive=True):
    if key not in obj:
        if default is None:
            raise SpecError(f"{path}.{key}: missing")
        return default
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise SpecError(f"{path}.{key}: expected a finite number, got {v!r}")
    if positive and not v > 0:
        raise SpecError(f"{path}.{key}: must be positive")
    return float(v)


def _integer(obj, key, path, default, minimum):
    v = obj.get(key, default)
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"{path}.{key}: expected an integer, got {v!r}")
    if v < minimum:
        raise SpecError(f"{path}.{key}: must be >= {minimum}")
    return v


def _points(obj, key, path, dim):
    if key not in obj:
        raise SpecError(f"{path}.{key}: missing")
    rows = obj[key]
    if not isinstance(rows, list):
        raise SpecError(f"{path}.{key}: expected a list of points")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise SpecError(f"{path}.{key}[{i}]: expected {dim} coordinates")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise SpecError(f"{path}.{key}[{i}][{j}]: expected a finite number, got {v!r}")
    return np.array(rows, dtype=float).reshape(-1, dim)


@dataclass(frozen=True)
class BodySpec:
    kind: str
    params: dict = field(default_factory=dict)
    samples: int | None = None

    @property
    def planar(self) -> bool:
        return self.kind in PLANAR

    def sagitta(self) -> float:
        """Largest gap between the sampled polygon and the smooth body; zero
        for polygons and polytopes.

        Samples are equally spaced in eccentric anomaly, so each chord is the
        affine image of a circle chord and its gap is at most
        ``a * (1 - cos(pi / N))``, about ``a * dt**2 / 8``.
        """
        if self.kind == "circle":
            return self.params["radius"] * (1 - math.cos(math.pi / self.samples))
        if self.kind == "ellipse":
            return self.params["a"] * (1 - math.cos(math.pi / self.samples))
        return 0.0


def parse_body_spec(obj, path: str = "body") -> BodySpec:
    if not isinstance(obj, dict):
        raise SpecError(f"{path}: expected a JSON object")
    kind = obj.get("kind")
    if kind is None and "vertices" in obj:
        rows = obj["vertices"]
        three = isinstance(rows, list) and rows and isinstance(rows[0], list) and len(rows[0]) == 3
        kind = "polytope" if three else "polygon"
    if kind == "ellipsoid":
        kind = "ellipsoid3"
    if kind not in PLANAR + SPATIAL:
        raise SpecError(f"{path}.kind: expected one of {', '.join(PLANAR + SPATIAL)}, got {kind!r}")
    if kind == "polygon":
        return BodySpec(kind, {"vertices": _points(obj, "vertices", path, 2).tolist()})
    if kind == "polytope":
        return BodySpec(kind, {"vertices": _points(obj, "vertices", path, 3).tolist()})
    if kind == "circle":
        return BodySpec(kind, {"radius": _number(obj, "radius", path, 1.0)},
                        _integer(obj, "samples", path, 1024, 16))
    if kind == "ellipse":
        a, b = _number(obj, "a", path), _number(obj, "b", path)
        if a < b:
            raise SpecError(f"{path}.a: semi-axes must satisfy a >= b")
        return BodySpec(kind, {"a": a, "b": b}, _integer(obj, "samples", path, 1024, 16))
    if kind == "icosphere":
        return BodySpec(kind, {"radius": _number(obj, "radius", path, 1.0),
                               "subdivisions": _integer(obj, "subdivisions", path, 4, 0)})
    if kind == "ellipsoid3":
        axes = obj.get("axes")
        if not isinstance(axes, list) or len(axes) != 3:
            raise SpecError(f"{path}.axes: expected [a, b, c]")
        for i, v in enumerate(axes):
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not v > 0 or not math.isfinite(v):
                raise SpecError(f"{path}.axes[{i}]: expected a positive number, got {v!r}")
        return BodySpec(kind, {"axes": [float(v) for v in axes],
                               "subdivisions": _integer(obj, "subdivisions", path, 5, 0)})
    return BodySpec(kind, {"side": _number(obj, "side", path, 2.0)})


def generate_body(spec: BodySpec):
    """Deterministic discretization of a body spec."""
    p = spec.params
    if spec.kind == "polygon":
        return ConvexPolyline2(p["vertices"])
    if spec.kind in ("circle", "ellipse"):
        t = 2 * math.pi * np.arange(spec.samples) / spec.samples
        a, b = (p["radius"], p["radius"]) if spec.kind == "circle" else (p["a"], p["b"])
        # eccentric anomaly; uniform in angle for the circle
        return ConvexPolyline2(np.stack([a * np.cos(t), b * np.sin(t)], axis=1))
    if spec.kind == "polytope":
        return ConvexPolytope3(p["vertices"])
    if spec.kind == "icosphere":
        return ConvexPolytope3(icosphere(p["subdivisions"], p["radius"]))
    if spec.kind == "ellipsoid3":
        return ConvexPolytope3(icosphere(p["subdivisions"]) * np.asarray(p["axes"]))
    return ConvexPolytope3(cube(p["side"]))


def load_json(path: str, label: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise SpecError(f"{label}: file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{label}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_body(path: str, label: str = "body"):
    spec = parse_body_spec(load_json(path, label), label)
    try:
        return spec, generate_body(spec)
    except ValueError as exc:
        raise SpecError(f"{label}: {exc}") from None


def _clean(obj):
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError("non-finite float in output")
        return obj
    if isinstance(obj, (np.floating,)):
        return _clean(float(obj))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def dumps(obj) -> str:
    """JSON text with shortest round-trip float reprs and a trailing newline."""
    return json.dumps(_clean(obj), indent=2, allow_nan=False) + "\n"

