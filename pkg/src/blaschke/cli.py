"""``blaschke`` command line.

Exit codes: 0 passed (or nothing to judge), 1 usage or input error,
2 failed, 3 hypothesis unsatisfied.  Relative output paths are resolved
against ``$BLASCHKE_OUT`` when it is set.
"""
from __future__ import annotations

import argparse
import math
import os
import sys

from . import normal_field as nf
from . import space3d as s3
from . import theorem_harness as th
from .bodies import SpecError, dumps, load_body, load_json
from .deformed_ngons import (
    fattened_radii,
    k_for_fattened,
    k_for_mangled,
    mangled_radii,
    placed_vertices,
    standard_fattened,
    standard_mangled,
)
from .rng import Xoshiro256
from .svg import render_svg

EXIT = {th.PASSED: 0, th.FAILED: 2, th.UNSATISFIED: 3}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _real(name, positive=False, nonneg=False):
    def parse(text):
        try:
            v = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name}: expected a number, got {text!r}") from None
        if not math.isfinite(v):
            raise argparse.ArgumentTypeError(f"{name}: must be finite")
        if positive and not v > 0:
            raise argparse.ArgumentTypeError(f"{name}: must be positive")
        if nonneg and v < 0:
            raise argparse.ArgumentTypeError(f"{name}: must be non-negative")
        return v
    return parse


def _count(name, minimum=1):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name}: expected an integer, got {text!r}") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"{name}: must be >= {minimum}")
        return v
    return parse


def _grid(text):
    out = []
    for i, part in enumerate(text.split(",")):
        try:
            v = float(part)
        except ValueError:
            raise argparse.ArgumentTypeError(f"--tau-grid[{i}]: expected a number, got {part!r}") from None
        if not (math.isfinite(v) and v > 0):
            raise argparse.ArgumentTypeError(f"--tau-grid[{i}]: must be a positive number")
        out.append(v)
    return out


def _out_path(path):
    base = os.environ.get("BLASCHKE_OUT")
    if base and not os.path.isabs(path):
        path = os.path.join(base, path)
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    return path


def _emit(obj, out):
    text = dumps(obj)
    if out:
        with open(_out_path(out), "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_svg(text, path):
    with open(_out_path(path), "w") as fh:
        fh.write(text)


def _planar(path, label="body"):
    spec, body = load_body(path, label)
    if not spec.planar:
        raise SpecError(f"{label}.kind: a planar body is required, got {spec.kind!r}")
    return spec, body


def _spatial(path, label="polytope"):
    spec, body = load_body(path, label)
    if spec.planar:
        raise SpecError(f"{label}.kind: a polytope is required, got {spec.kind!r}")
    return spec, body


# -- subcommands ---------------------------------------------------------------

def cmd_ngon(a):
    if a.k is not None:
        k = a.k
    else:
        if not 0 < a.phi:
            raise SpecError("--phi: must be positive")
        k = k_for_mangled(a.phi) if a.family == "mangled" else k_for_fattened(min(a.phi, math.pi / 2))
    if a.family == "mangled":
        if k < 2:
            raise SpecError("--k: the mangled polygon needs k >= 2")
        ngon, (r, R) = standard_mangled(k), mangled_radii(k=k)
    else:
        if k < 1:
            raise SpecError("--k: the fattened polygon needs k >= 1")
        ngon, (r, R) = standard_fattened(k), fattened_radii(k=k)
    verts = placed_vertices(ngon.vertices, (a.x, a.y), a.alpha, a.tau)
    out = {
        "kind": "polygon",
        "family": a.family,
        "k": k,
        "phi": a.phi,
        "phi_star": ngon.phi_star,
        "placement": {"x": [a.x, a.y], "alpha": a.alpha, "tau": a.tau},
        "radii": {"r": r, "R": R},
        "placed_radii": {"r": a.tau * r, "R": a.tau * R},
        "center": placed_vertices(ngon.center()[None, :], (a.x, a.y), a.alpha, a.tau)[0],
        "vertices": verts,
        "standard_vertices": ngon.vertices,
    }
    _emit(out, a.out)
    if a.svg:
        _write_svg(render_svg([verts]), a.svg)
    return 0


def cmd_analyze(a):
    spec, curve = _planar(a.body)
    field = nf.lift_normals(curve)
    longest = float(curve.edge_lengths.max())
    out = {"body": spec.kind, "vertices": curve.n, "tau": a.tau, "metric": a.metric}

    def oscillation(metric):
        if longest >= a.tau:
            return None, "edge longer than tau"
        v = nf.minimal_oscillation(field, a.tau, metric)
        if nf.is_vacuous(v):
            return None, "no boundary points at distance tau or more"
        return v, None

    out["omega"] = nf.modulus_of_continuity(field, a.tau, "chord")
    out["Omega"], out["Omega_reason"] = oscillation("chord")
    if a.tau < field.perimeter / 2:
        out["omega_arc"], out["omega_arc_reason"] = nf.modulus_of_continuity(field, a.tau, "arc"), None
        out["Omega_arc"], out["Omega_arc_reason"] = oscillation("arc")
    else:
        reason = "tau is not below half the perimeter"
        out["omega_arc"], out["omega_arc_reason"] = None, reason
        out["Omega_arc"], out["Omega_arc_reason"] = None, reason
    sel = "" if a.metric == "chord" else "_arc"
    out["modulus"] = out["omega" + sel]
    out["minimal_oscillation"] = out["Omega" + sel]
    out["discretization_slack"] = nf.discretization_slack(field)
    out["sagitta"] = spec.sagitta()
    h = a.h if a.h is not None else 0.002 * field.perimeter
    kappa = nf.curvature_profile(field, h)
    i, j = int(kappa.argmax()), int(kappa.argmin())
    out["curvature"] = {"h": h, "max": float(kappa[i]), "max_at": curve.vertices[i],
                        "min": float(kappa[j]), "min_at": curve.vertices[j]}
    _emit(out, a.out)
    return 0


def cmd_verify(a):
    spec, curve = _planar(a.body)
    tol = max(th.default_tolerance(curve), spec.sagitta()) if a.tol is None else a.tol
    kw = dict(sample_count=a.samples, tol=tol, place_tau=a.place_tau, body_id=os.path.basename(a.body))
    if a.mode == "inscribed":
        report = th.verify_inscribed(curve, a.tau, a.metric, **kw)
    else:
        if a.metric != "chord":
            raise SpecError("--metric: the circumscribed check uses the chord metric")
        report = th.verify_outscribed(curve, a.tau, **kw)
    _emit(report.to_dict(), a.out)
    if a.svg:
        _write_svg(render_svg([curve.vertices], markers=[f[1] for f in report.failures]), a.svg)
    return EXIT[report.status]


def cmd_limit(a):
    spec, curve = _planar(a.body)
    fn = th.blaschke_limit_inscribed if a.mode == "blaschke" else th.strantzen_limit_outscribed
    tol = max(th.sagitta_tolerance(curve), spec.sagitta()) if a.tol is None else a.tol
    table = fn(curve, a.kappa0, a.tau_grid, sample_count=a.samples, tol=tol)
    out = table.to_dict()
    out["body"] = spec.kind
    _emit(out, a.out)
    return 0 if table.disk_contained else 2


def _planes(rng, count):
    return [s3.random_plane(rng) for _ in range(count)]


def cmd_space(a):
    spec, poly = _spatial(a.polytope)
    base = {"body": spec.kind, "facets": len(poly.facets), "inradius_r": poly.inradius_r,
            "outradius_R": poly.outradius_R, "center": poly.center, "seed": a.seed}
    if a.mode == "verify":
        report = s3.verify_space_inscribed(poly, a.tau, a.phi, sample_count=a.samples, planes=a.planes,
                                           tol=a.tol, body_id=os.path.basename(a.polytope))
        out = report.to_dict()
        out.update(base)
        _emit(out, a.out)
        return EXIT[report.status]
    rng = Xoshiro256(a.seed)
    r_over_R = poly.inradius_r / poly.outradius_R
    rows, status = [], th.PASSED
    omega_body = s3.body_normal_modulus(poly, a.tau) if a.mode == "bound" else None
    for e1, e2 in _planes(rng, a.planes):
        sec = s3.section(poly, e1, e2)
        pc = s3.projection_checks(sec)
        row = {"e1": e1, "e2": e2, "section_vertices": sec.polygon.n,
               "min_projection": pc.min_projection, "cone_violation": pc.cone_violation,
               "pair_worst_ratio": pc.pair_worst_ratio, "projection_ok": pc.holds(r_over_R)}
        ok = row["projection_ok"]
        if a.mode == "section":
            row["vertices"] = sec.to_space(sec.polygon.vertices)
        else:
            chk = s3.check_section_bound(poly, sec, a.tau, omega_body)
            row.update(chk.to_dict())
            row["status"] = chk.status
            if chk.status == th.UNSATISFIED:
                ok = ok and chk.norm_ok
                status = th.UNSATISFIED if status == th.PASSED else status
            else:
                ok = ok and chk.passed
        if not ok:
            status = th.FAILED
        rows.append(row)
    out = dict(base, mode=a.mode, tau=a.tau, status=status, planes=rows)
    if omega_body is not None:
        out["omega_body"] = omega_body
    _emit(out, a.out)
    return EXIT[status]


def cmd_render(a):
    _, curve = _planar(a.body)
    overlays = []
    for i, path in enumerate(a.overlay or []):
        _, o = _planar(path, f"overlay[{i}]")
        overlays.append(o.vertices)
    markers = []
    if a.report:
        rep = load_json(a.report, "report")
        fails = rep.get("failures", []) if isinstance(rep, dict) else None
        if not isinstance(fails, list):
            raise SpecError("report.failures: expected a list")
        for i, f in enumerate(fails):
            p = f.get("point") if isinstance(f, dict) else None
            if not (isinstance(p, list) and len(p) == 2 and all(isinstance(v, (int, float)) for v in p)):
                raise SpecError(f"report.failures[{i}].point: expected [x, y]")
            markers.append(p)
    _write_svg(render_svg([curve.vertices], overlays, markers), a.svg)
    return 0


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="blaschke", description="Discrete Blaschke theorems on convex polygons and polytopes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("ngon", help="mangled or fattened polygon with its radii")
    g.add_argument("family", choices=["mangled", "fattened"])
    kk = g.add_mutually_exclusive_group(required=True)
    kk.add_argument("--k", type=_count("--k"))
    kk.add_argument("--phi", type=_real("--phi", positive=True))
    g.add_argument("--tau", type=_real("--tau", positive=True), default=1.0)
    g.add_argument("--alpha", type=_real("--alpha"), default=0.0)
    g.add_argument("--x", type=_real("--x"), default=0.0)
    g.add_argument("--y", type=_real("--y"), default=0.0)
    g.add_argument("--out")
    g.add_argument("--svg")
    g.set_defaults(func=cmd_ngon)

    g = sub.add_parser("analyze", help="moduli, oscillations and curvature of a planar body")
    g.add_argument("--body", required=True)
    g.add_argument("--tau", type=_real("--tau", positive=True), required=True)
    g.add_argument("--metric", choices=["chord", "arc"], default="chord")
    g.add_argument("--h", type=_real("--h", positive=True))
    g.add_argument("--out")
    g.set_defaults(func=cmd_analyze)

    g = sub.add_parser("verify", help="place deformed polygons along the boundary")
    g.add_argument("mode", choices=["inscribed", "outscribed"])
    g.add_argument("--body", required=True)
    g.add_argument("--tau", type=_real("--tau", positive=True), required=True)
    g.add_argument("--metric", choices=["chord", "arc"], default="chord")
    g.add_argument("--samples", type=_count("--samples"), default=256)
    g.add_argument("--tol", type=_real("--tol", nonneg=True))
    g.add_argument("--place-tau", type=_real("--place-tau", positive=True))
    g.add_argument("--out")
    g.add_argument("--svg")
    g.set_defaults(func=cmd_verify)

    g = sub.add_parser("limit", help="rolling disk limits along a grid of tau")
    g.add_argument("mode", choices=["blaschke", "strantzen"])
    g.add_argument("--body", required=True)
    g.add_argument("--kappa0", type=_real("--kappa0", positive=True), required=True)
    g.add_argument("--tau-grid", type=_grid, required=True)
    g.add_argument("--samples", type=_count("--samples"), default=256)
    g.add_argument("--tol", type=_real("--tol", nonneg=True))
    g.add_argument("--out")
    g.set_defaults(func=cmd_limit)

    g = sub.add_parser("space", help="plane sections of a polytope")
    g.add_argument("mode", choices=["section", "bound", "verify"])
    g.add_argument("--polytope", required=True)
    g.add_argument("--tau", type=_real("--tau", positive=True), required=True)
    g.add_argument("--phi", type=_real("--phi", positive=True))
    g.add_argument("--planes", type=_count("--planes"), default=8)
    g.add_argument("--seed", type=_count("--seed", 0), default=0)
    g.add_argument("--samples", type=_count("--samples"), default=64)
    g.add_argument("--tol", type=_real("--tol", nonneg=True))
    g.add_argument("--out")
    g.set_defaults(func=cmd_space)

    g = sub.add_parser("render", help="SVG of a body with overlays and failures")
    g.add_argument("--body", required=True)
    g.add_argument("--overlay", action="append")
    g.add_argument("--report")
    g.add_argument("--svg", required=True)
    g.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, ValueError, OSError) as exc:
        print(f"blaschke: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
