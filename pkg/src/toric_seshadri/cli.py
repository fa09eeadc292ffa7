"""Command-line entry point.

Every subcommand prints one report {"command", "inputs", "result", "checks"}
as sorted-key JSON (or a plain table).  Exit status: 0 success, 1 input
error, 2 failed check under ``verify``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import battery, rank_one
from .classes import (CurveClass, DivisorClass, blowup_context, cone_system, divisor_volume, fraction_str,
                      is_ample, section_polytope)
from .cone_vertex import ConeVertexInput, vertex_seshadri_curve, vertex_seshadri_dual
from .lattice_fan import Fan, fan_validate, require_projective, star_subdivision
from .polyhedra import ehrhart_leading_coefficient
from .seshadri import (bound_product_check, bound_vol_checks, fujita_curve, fujita_divisor, null_locus,
                       power_bound_check, seshadri_curve, seshadri_curve_blowup, seshadri_divisor,
                       seshadri_nef_dual, table_from_curve, table_from_divisor, theorem_a_check, value_str)

METHODS = {"ray": "RayFormula", "blowup": "BlowupMaxShift", "both": "Both"}


class InputError(Exception):
    """Bad user input; reported as a one-line diagnostic with exit status 1."""


@dataclass
class RunConfig:
    command: str
    fan_path: str | None = None
    class_paths: dict[str, str] = field(default_factory=dict)
    point: int | None = None
    method: str = "Both"
    output: str = "json"


# -- I/O -----------------------------------------------------------------------


def _read_json(path: str, what: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{what}: file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: malformed JSON in {path} (line {exc.lineno}: {exc.msg})") from None


def _fractions(values, what: str) -> tuple[Fraction, ...]:
    if not isinstance(values, list):
        raise InputError(f"{what}: expected a list of rationals")
    try:
        return tuple(Fraction(str(x)) for x in values)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{what}: entries must be rationals written as p/q") from None


def load_fan(path: str, validate: bool = True) -> Fan:
    data = _read_json(path, "fan")
    if not isinstance(data, dict):
        raise InputError("fan: expected an object with rays and max_cones")
    fan = Fan.from_json(data)
    if validate:
        require_projective(fan)
    return fan


def load_divisor(fan: Fan, path: str, what: str = "divisor") -> DivisorClass:
    data = _read_json(path, what)
    if not isinstance(data, dict) or "coeffs" not in data:
        raise InputError(f"{what}.coeffs: missing field")
    coeffs = _fractions(data["coeffs"], f"{what}.coeffs")
    if len(coeffs) != fan.nrays:
        raise InputError(f"{what}.coeffs: expected {fan.nrays} entries, got {len(coeffs)}")
    return DivisorClass(fan, coeffs)


def load_curve(fan: Fan, path: str, what: str = "curve") -> CurveClass:
    data = _read_json(path, what)
    if not isinstance(data, dict) or "pairings" not in data:
        raise InputError(f"{what}.pairings: missing field")
    pairings = _fractions(data["pairings"], f"{what}.pairings")
    if len(pairings) != fan.nrays:
        raise InputError(f"{what}.pairings: expected {fan.nrays} entries, got {len(pairings)}")
    return CurveClass(fan, pairings)


def jsonable(obj):
    """Rationals to canonical p/q strings, infinities to "inf"/"-inf"."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return fraction_str(obj)
    if isinstance(obj, float):
        if math.isinf(obj):
            return value_str(obj)
        return fraction_str(Fraction(obj))
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if hasattr(obj, "value"):
        return obj.value
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def make_report(command: str, inputs: dict, result, checks=()) -> dict:
    return {"command": command, "inputs": inputs, "result": jsonable(result),
            "checks": [jsonable(c.to_json()) for c in checks]}


def dump(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def render_table(report: dict) -> str:
    lines = [f"command: {report['command']}"]

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k in sorted(obj):
                walk(f"{prefix}.{k}" if prefix else k, obj[k])
        else:
            lines.append(f"  {prefix}: {json.dumps(obj) if isinstance(obj, list) else obj}")

    walk("", report["result"])
    for c in report["checks"]:
        lines.append(f"  [{'PASS' if c['pass'] else 'FAIL'}] {c['name']}: expected {c['expected']}, got {c['got']}")
    return "\n".join(lines)


# -- commands ------------------------------------------------------------------


def _cone_json(cone):
    return {"rays": [list(r) for r in cone.rays], "lineality": [list(r) for r in cone.lineality]}


def _point(fan: Fan, point: int) -> int:
    return fan.cone_index(point)


def cmd_check(args):
    fan = load_fan(args.fan, validate=False)
    rep = fan_validate(fan)
    return rep.to_json(), []


def cmd_cones(args):
    fan = load_fan(args.fan)
    cs = cone_system(fan)
    result = {"eff1": _cone_json(cs.eff1), "nef1": _cone_json(cs.nef1),
              "mov1": _cone_json(cs.mov1), "mori": _cone_json(cs.mori)}
    checks = [battery.check(f"duality/inclusion: {k}", True, v) for k, v in sorted(cs.check().items())]
    return result, checks


def cmd_seshadri_curve(args):
    fan = load_fan(args.fan)
    curve = load_curve(fan, args.curve)
    k = _point(fan, args.point)
    method = METHODS[args.method]
    result, checks = {}, []
    ray = seshadri_curve(curve, k)
    if method in ("RayFormula", "Both"):
        result["RayFormula"] = ray
    if method in ("BlowupMaxShift", "Both"):
        if not curve.is_movable:
            if method == "BlowupMaxShift":
                raise InputError("curve: not movable; the blow-up method needs a movable class")
            result["note"] = "curve not movable: BlowupMaxShift skipped, RayFormula status reported"
        else:
            result["BlowupMaxShift"] = seshadri_curve_blowup(curve, k)
    if "RayFormula" in result and "BlowupMaxShift" in result:
        checks.append(battery.check("methods agree", value_str(ray.value),
                                    value_str(result["BlowupMaxShift"].value)))
    first = result.get("RayFormula") or result["BlowupMaxShift"]
    result["value"] = value_str(first.value)
    result["status"] = first.status.value
    return result, checks


def cmd_seshadri_divisor(args):
    fan = load_fan(args.fan)
    d = load_divisor(fan, args.divisor)
    return {"value": seshadri_divisor(d, _point(fan, args.point))}, []


def cmd_seshadri_nef_dual(args):
    fan = load_fan(args.fan)
    sources = [x for x in (args.table, args.divisor, args.curve) if x]
    if len(sources) != 1:
        raise InputError("table: give exactly one of --table, --divisor, --curve")
    k = args.k
    if args.divisor:
        k = 1 if k is None else k
        if k != 1:
            raise InputError("k: a divisor class gives a k = 1 table")
        table = table_from_divisor(load_divisor(fan, args.divisor))
    elif args.curve:
        k = fan.dim - 1 if k is None else k
        if k != fan.dim - 1:
            raise InputError(f"k: a curve class gives a k = {fan.dim - 1} table")
        table = table_from_curve(load_curve(fan, args.curve))
    else:
        if k is None:
            raise InputError("k: required with --table")
        data = _read_json(args.table, "table")
        if not isinstance(data, dict) or not isinstance(data.get("entries"), list):
            raise InputError("table.entries: missing field")
        table = {}
        for i, e in enumerate(data["entries"]):
            if not isinstance(e, dict) or "cone" not in e or "value" not in e:
                raise InputError(f"table.entries[{i}]: expected {{cone, value}}")
            table[tuple(sorted(int(x) for x in e["cone"]))] = _fractions([e["value"]], f"table.entries[{i}].value")[0]
    value = seshadri_nef_dual(fan, k, table, _point(fan, args.point))
    return {"k": k, "value": value}, []


def cmd_fujita_divisor(args):
    fan = load_fan(args.fan)
    d = load_divisor(fan, args.divisor)
    return fujita_divisor(d, _point(fan, args.point)), []


def cmd_fujita_curve(args):
    fan = load_fan(args.fan)
    c = load_curve(fan, args.curve)
    return fujita_curve(c, _point(fan, args.point)), []


def cmd_null_locus(args):
    fan = load_fan(args.fan)
    c = load_curve(fan, args.curve)
    nl = null_locus(c)
    ta = theorem_a_check(c)
    checks = [battery.check("independent whenever some invariant point is positive", True, nl.consistent),
              battery.check("interior <-> min eps > 0", True, ta.consistent)]
    return {"null_locus": nl, "interior_check": ta}, checks


def cmd_blowup(args):
    fan = load_fan(args.fan)
    k = _point(fan, args.point)
    ctx = blowup_context(fan, k)
    new_fan, new_ray = star_subdivision(fan, k)
    result = {"fan": new_fan.to_json(), "new_ray": new_ray, "exceptional_divisor": ctx.E.to_json(),
              "line_class": ctx.ell.to_json()}
    if args.divisor:
        result["pullback_divisor"] = ctx.pull_divisor(load_divisor(fan, args.divisor)).to_json()
    if args.curve:
        result["pullback_curve"] = ctx.pull_curve(load_curve(fan, args.curve)).to_json()
    if args.write:
        with open(args.write, "w") as fh:
            json.dump(new_fan.to_json(), fh, sort_keys=True)
    return result, []


def cmd_volume(args):
    fan = load_fan(args.fan)
    d = load_divisor(fan, args.divisor)
    vol = divisor_volume(d)
    result = {"volume": vol}
    checks = []
    if args.ehrhart:
        P = section_polytope(d)
        if P.is_empty:
            result["ehrhart_leading"] = 0
        else:
            n = fan.dim
            lead = ehrhart_leading_coefficient(P)
            result["ehrhart_leading"] = lead
            checks.append(battery.check("n! * Ehrhart leading coefficient = volume", vol, math.factorial(n) * lead))
    return result, checks


def cmd_bounds(args):
    fan = load_fan(args.fan)
    k = _point(fan, args.point)
    result, checks = {}, []
    curve = load_curve(fan, args.curve) if args.curve else None
    divisor = load_divisor(fan, args.divisor) if args.divisor else None
    if curve is None and divisor is None:
        raise InputError("curve: give --curve and/or --divisor")
    if curve is not None and divisor is not None:
        prod = bound_product_check(curve, divisor, k)
        result["product"] = prod
        checks.append(battery.check("eps * mu <= C.L", True, prod["holds"]))
        if divisor_volume(divisor) > 0:
            vol = bound_vol_checks(curve, divisor, k)
            result["volume"] = vol
            checks.append(battery.check("mu^n >= vol", True, vol["mu_vs_vol"]))
            checks.append(battery.check("eps^n vol <= (C.L)^n", True, vol["eps_vs_vol"]))
    if divisor is not None and is_ample(divisor):
        pw = power_bound_check(divisor, k)
        result["power"] = pw
        checks.append(battery.check("eps(H^{n-1}) >= eps(H)^{n-1}", True, pw["holds"]))
        checks.append(battery.check("eps(H^{n-1})^n <= (H^n)^{n-1}", True, pw["upper_holds"]))
    return result, checks


def cmd_rank1(args):
    if args.list:
        return {"datasets": [d.name for d in rank_one.builtin_datasets()]}, []
    if args.dataset:
        data = rank_one.dataset(args.dataset)
    else:
        if args.n is None or args.deg is None:
            raise InputError("n: --n and --deg are required without --dataset")

        def q(x, what):
            return None if x is None else _fractions([x], what)[0]

        kw = dict(eps_div=q(args.eps_div, "eps-div"), mu_div=q(args.mu_div, "mu-div"), ordered=args.ordered)
        if args.eps_c is not None or args.mu_c is not None:
            data = rank_one.RankOneData.from_curve_values(
                args.n, q(args.deg, "deg"), q(args.curve_scale, "curve-scale"),
                eps_c=q(args.eps_c, "eps-c"), mu_c=q(args.mu_c, "mu-c"), **kw)
        else:
            data = rank_one.RankOneData(n=args.n, deg=q(args.deg, "deg"), curve_scale=q(args.curve_scale, "curve-scale"),
                                        eps_curve=q(args.eps_curve, "eps-curve"), mu_curve=q(args.mu_curve, "mu-curve"),
                                        **kw)
    solved = rank_one.solve(data)
    checks = [battery.check("eps(H) * mu(H^{n-1}) = H^n", solved.deg, solved.eps_div * solved.mu_curve),
              battery.check("eps(H^{n-1}) * mu(H) = H^n", solved.deg, solved.eps_curve * solved.mu_div)]
    if solved.ordered:
        checks.append(battery.check("eps(H)^n <= H^n <= mu(H)^n", True, rank_one.ordering_holds(solved)))
    return {"invariants": solved.to_json(), "cones": rank_one.blowup_cones(solved)}, checks


def cmd_cone_vertex(args):
    fan = load_fan(args.fan)
    inp = ConeVertexInput(load_divisor(fan, args.alpha, "alpha"), load_divisor(fan, args.h, "h"))
    dual, curve = vertex_seshadri_dual(inp), vertex_seshadri_curve(inp)
    return {"dual_value": dual, "curve_value": curve}, [battery.check("dual <= curve", True, dual <= curve)]


def cmd_verify(args):
    only = args.criterion or None
    start = time.perf_counter()
    rows = battery.run_battery(args.seed, only)
    checks, summary = [], []
    for num, title, cs in rows:
        ok = all(c.passed for c in cs)
        summary.append({"criterion": num, "title": title, "pass": ok, "checks": len(cs)})
        checks.extend(battery.Check(f"[{num}] {c.name}", c.expected, c.got, c.passed) for c in cs)
    result = {"criteria": summary, "all_pass": all(s["pass"] for s in summary)}
    if args.timing:
        result["seconds"] = f"{time.perf_counter() - start:.2f}"
    return result, checks


COMMANDS = {
    "check": cmd_check, "cones": cmd_cones, "seshadri-curve": cmd_seshadri_curve,
    "seshadri-divisor": cmd_seshadri_divisor, "seshadri-nef-dual": cmd_seshadri_nef_dual,
    "fujita-divisor": cmd_fujita_divisor, "fujita-curve": cmd_fujita_curve, "null-locus": cmd_null_locus,
    "blowup": cmd_blowup, "volume": cmd_volume, "bounds": cmd_bounds, "rank1": cmd_rank1,
    "cone-vertex": cmd_cone_vertex, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toric-seshadri", description="Local positivity invariants of toric varieties.")
    p.add_argument("--output", choices=["json", "table"], default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help, fan=True, point=False, curve=False, divisor=False):
        s = sub.add_parser(name, help=help)
        s.add_argument("--output", choices=["json", "table"], default=argparse.SUPPRESS)
        if fan:
            s.add_argument("--fan", required=True, help="fan JSON file")
        if point:
            s.add_argument("--point", type=int, default=0, help="maximal-cone index of the fixed point")
        if curve:
            s.add_argument("--curve", required=curve == "required", help="curve class JSON file")
        if divisor:
            s.add_argument("--divisor", required=divisor == "required", help="divisor class JSON file")
        return s

    add("check", "validate a fan")
    add("cones", "extremal rays of Eff^1, Nef^1, Mov_1 and the Mori cone")
    s = add("seshadri-curve", "Seshadri constant of a curve class", point=True, curve="required")
    s.add_argument("--method", choices=sorted(METHODS), default="both")
    add("seshadri-divisor", "Seshadri constant of a nef divisor", point=True, divisor="required")
    s = add("seshadri-nef-dual", "Seshadri constant of a nef dual class from a table", point=True,
            curve=True, divisor=True)
    s.add_argument("--k", type=int)
    s.add_argument("--table", help='JSON {"entries": [{"cone": [...], "value": "p/q"}]}')
    add("fujita-divisor", "mu of a pseudo-effective divisor", point=True, divisor="required")
    add("fujita-curve", "mu of a pseudo-effective curve class", point=True, curve="required")
    add("null-locus", "null rays of a movable curve class", curve="required")
    s = add("blowup", "blow up a fixed point", point=True, curve=True, divisor=True)
    s.add_argument("--write", help="write the blown-up fan to this file")
    s = add("volume", "volume of a divisor", divisor="required")
    s.add_argument("--ehrhart", action="store_true", help="cross-check with lattice point counts")
    add("bounds", "product, volume and power inequalities", point=True, curve=True, divisor=True)
    s = add("rank1", "Picard rank one calculator", fan=False)
    s.add_argument("--dataset")
    s.add_argument("--list", action="store_true")
    s.add_argument("--n", type=int)
    s.add_argument("--deg")
    for flag in ("--eps-div", "--mu-div", "--eps-curve", "--mu-curve", "--eps-c", "--mu-c"):
        s.add_argument(flag)
    s.add_argument("--curve-scale", default="1")
    s.add_argument("--ordered", action="store_true", help="require eps(H)^n <= H^n <= mu(H)^n")
    s = add("cone-vertex", "constants at the vertex of a cone over a toric surface", fan=True)
    s.add_argument("--alpha", required=True)
    s.add_argument("--h", required=True)
    s = add("verify", "run the full verification battery", fan=False)
    s.add_argument("--seed", type=int, default=battery.SEED)
    s.add_argument("--criterion", type=int, action="append", help="run only these criteria")
    s.add_argument("--timing", action="store_true")
    return p


def _config(args) -> RunConfig:
    paths = {k: getattr(args, k) for k in ("curve", "divisor", "alpha", "h", "table")
             if getattr(args, k, None)}
    return RunConfig(args.command, getattr(args, "fan", None), paths, getattr(args, "point", None),
                     METHODS[getattr(args, "method", "both")], args.output)


def _inputs(cfg: RunConfig) -> dict:
    out = {}
    if cfg.fan_path:
        out["fan"] = cfg.fan_path
    out.update(cfg.class_paths)
    if cfg.point is not None:
        out["point"] = cfg.point
    if cfg.command == "seshadri-curve":
        out["method"] = cfg.method
    return out


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    cfg = _config(args)
    try:
        result, checks = COMMANDS[cfg.command](args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    report = make_report(cfg.command, _inputs(cfg), result, checks)
    print(dump(report) if cfg.output == "json" else render_table(report), file=stdout)
    if cfg.command == "verify" and not all(c.passed for c in checks):
        return 2
    return 0


def main() -> None:
    sys.exit(run())


__all__ = ["RunConfig", "run", "main", "load_fan", "load_divisor", "load_curve", "make_report", "jsonable",
           "InputError"]
