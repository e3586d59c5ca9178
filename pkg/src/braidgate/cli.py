"""Command-line front end.

Subcommands: catalog, verify, invariants, linkpoly, enhance, epower,
classify, orbit, report-all.  Operators are specified by catalog id plus
parameters, raw X-type parameters, a Hietarinta family, or an explicit
matrix.  Complex values are accepted as "a+bi" or "[re,im]" and always
printed as [re, im] pairs.  Exit codes: 0 all checks pass, 1 a check failed,
2 usage or specification error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

import numpy as np

from . import enhancement, entangling_power, hietarinta, invariants, yang_baxter
from .matrix_core import DEFAULT_TOL, is_xtype
from .yang_baxter import BraidWord, CATALOG, VARIANT_COUNTS, assemble

USAGE_ERROR = 2
CHECK_FAILED = 1


class UsageError(Exception):
    pass


def _parse_complex(text: str) -> complex:
    """Accept 'a+bi', plain reals, or '[re,im]'."""
    text = text.strip()
    if text.startswith("["):
        parts = json.loads(text)
        if not isinstance(parts, list) or len(parts) != 2:
            raise UsageError(f"bad complex literal {text!r}")
        return complex(float(parts[0]), float(parts[1]))
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise UsageError(f"bad complex literal {text!r}") from None


def _split_commas(text: str) -> list[str]:
    """Split on commas that are not inside brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return parts


def _parse_params(text: str | None) -> dict[str, complex]:
    if not text:
        return {}
    out = {}
    for chunk in _split_commas(text):
        if "=" not in chunk:
            raise UsageError(f"expected name=value, got {chunk!r}")
        name, value = chunk.split("=", 1)
        out[name.strip()] = _parse_complex(value)
    return out


def _cnum(z) -> list[float]:
    z = complex(z)
    return [float(f"{z.real:.17g}"), float(f"{z.imag:.17g}")]


def _jsonable(obj):
    if isinstance(obj, complex):
        return _cnum(obj)
    if isinstance(obj, (np.complexfloating,)):
        return _cnum(complex(obj))
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def resolve_operator(args) -> tuple[np.ndarray, dict]:
    """Turn the operator flags into a matrix plus an echo of the inputs."""
    given = [name for name in ("cls", "xtype", "hietarinta", "matrix")
             if getattr(args, name, None)]
    if len(given) != 1:
        raise UsageError("specify exactly one of --class, --xtype, --hietarinta, --matrix")
    params = _parse_params(getattr(args, "params", None))
    if args.cls:
        entry = yang_baxter.catalog_entry(args.cls)
        h = entry.fill(params)
        return assemble(h), {"class": args.cls, "params": {k: _cnum(v) for k, v in params.items()}}
    if args.xtype:
        values = [_parse_complex(v) for v in _split_commas(args.xtype)]
        if len(values) != 8:
            raise UsageError("--xtype needs eight comma-separated complex values")
        return assemble(values), {"xtype": [_cnum(v) for v in values]}
    if args.hietarinta:
        m = hietarinta.hietarinta_assemble(args.hietarinta, params)
        return m, {"hietarinta": args.hietarinta,
                   "params": {k: _cnum(v) for k, v in params.items()}}
    rows = json.loads(args.matrix)
    m = np.array([[complex(v[0], v[1]) if isinstance(v, list) else complex(v)
                   for v in row] for row in rows])
    if m.shape != (4, 4):
        raise UsageError("--matrix must be a 4x4 array")
    return m, {"matrix": [[_cnum(v) for v in row] for row in m]}


def _emit(args, report: dict, failed: bool) -> int:
    report = _jsonable(report)
    if getattr(args, "csv", False):
        _emit_csv(report)
    elif getattr(args, "json", False):
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _emit_text(report)
    return CHECK_FAILED if failed else 0


def _emit_text(report, indent=0):
    pad = "  " * indent
    if isinstance(report, dict):
        for k, v in report.items():
            if isinstance(v, (dict, list)) and not _is_cnum(v):
                print(f"{pad}{k}:")
                _emit_text(v, indent + 1)
            else:
                print(f"{pad}{k}: {_fmt_leaf(v)}")
    elif isinstance(report, list):
        for v in report:
            if isinstance(v, (dict, list)) and not _is_cnum(v):
                _emit_text(v, indent)
                print()
            else:
                print(f"{pad}- {_fmt_leaf(v)}")
    else:
        print(f"{pad}{_fmt_leaf(report)}")


def _is_cnum(v):
    return (isinstance(v, list) and len(v) == 2
            and all(isinstance(t, (int, float)) for t in v))


def _fmt_leaf(v):
    if _is_cnum(v):
        return f"[{v[0]:.17g}, {v[1]:.17g}]"
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _emit_csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf)
    rows = report.get("rows") if isinstance(report, dict) else None
    if rows:
        keys = sorted({k for row in rows for k in row})
        writer.writerow(keys)
        for row in rows:
            writer.writerow([json.dumps(_jsonable(row.get(k))) for k in keys])
    else:
        writer.writerow(["key", "value"])
        def walk(prefix, obj):
            if isinstance(obj, dict):
                for k, v in obj.items():
                    walk(f"{prefix}.{k}" if prefix else k, v)
            else:
                writer.writerow([prefix, json.dumps(_jsonable(obj))])
        walk("", report)
    sys.stdout.write(buf.getvalue())


def _base_report(args, command: str) -> dict:
    rep = {"command": command, "tolerance": args.tol}
    if getattr(args, "seed", None) is not None:
        rep["seed"] = args.seed
    return rep


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_catalog(args) -> int:
    rows = []
    if args.hietarinta_list:
        for name, (pars, _) in hietarinta.HIETARINTA_FORMS.items():
            rows.append({"id": name, "params": list(pars)})
    else:
        for eid, entry in CATALOG.items():
            if args.cls and entry.class_id != int(args.cls):
                continue
            rows.append({
                "id": eid,
                "free_params": list(entry.free_params),
                "constraints": dict(entry.constraints),
                "eigenvalues": entry.eigen_pattern,
                "enhancements": list(
                    CATALOG[f"C{entry.class_id}.0"].enhancement_refs
                ),
            })
    report = _base_report(args, "catalog")
    report["count"] = len(rows)
    if not args.hietarinta_list and not args.cls:
        report["classes"] = len(VARIANT_COUNTS)
    report["rows"] = rows
    return _emit(args, report, failed=False)


def cmd_verify(args) -> int:
    r, echo = resolve_operator(args)
    report = _base_report(args, "verify")
    report["operator"] = echo
    checks = {}
    residual, ok = yang_baxter.check_ybe(r, args.tol)
    checks["ybe"] = {"residual": residual, "pass": ok}
    inv = invariants.quadratic_invariants(r)
    ids = invariants.check_identities(inv)
    checks["invariant_identities"] = {"residuals": list(ids),
                                      "pass": all(v < args.tol for v in ids)}
    if args.enhancements:
        if not args.cls:
            raise UsageError("--enhancements requires --class")
        entry = yang_baxter.catalog_entry(args.cls)
        params = _parse_params(args.params)
        recipes = {}
        for rid in CATALOG[f"C{entry.class_id}.0"].enhancement_refs:
            recipe = enhancement.RECIPES[rid]
            try:
                sub = {k: params[k] for k in recipe.free_params}
                e = enhancement.instantiate_recipe(rid, sub, args.tol)
                residuals, ok = enhancement.verify_enhancement(e, args.tol)
                recipes[rid] = {"residuals": list(residuals), "pass": ok}
            except KeyError as exc:
                raise UsageError(f"recipe {rid} needs parameter {exc}") from None
            except enhancement.InvalidEnhancementError as exc:
                recipes[rid] = {"error": str(exc), "pass": False}
        checks["enhancements"] = recipes
    report["checks"] = checks
    failed = not all(
        c.get("pass", all(v.get("pass", False) for v in c.values() if isinstance(v, dict)))
        for c in checks.values()
    )
    return _emit(args, report, failed)


def cmd_invariants(args) -> int:
    r, echo = resolve_operator(args)
    inv = invariants.quadratic_invariants(r)
    report = _base_report(args, "invariants")
    report["operator"] = echo
    report["invariants"] = inv.to_json()
    ids = invariants.check_identities(inv)
    report["identity_residuals"] = list(ids)
    if is_xtype(r):
        h = [r[0, 0], r[0, 3], r[1, 1], r[1, 2], r[2, 1], r[2, 2], r[3, 0], r[3, 3]]
        report["xtype_closed_forms"] = {
            k: _cnum(v) for k, v in invariants.xtype_closed_forms(h).items()
        }
    failed = not all(v < args.tol for v in ids)
    return _emit(args, report, failed)


def cmd_linkpoly(args) -> int:
    recipe = enhancement.RECIPES.get(args.recipe)
    if recipe is None:
        raise UsageError(f"unknown recipe {args.recipe!r}; see `catalog`")
    params = _parse_params(args.params)
    missing = [k for k in recipe.free_params if k not in params]
    if missing:
        raise UsageError(f"recipe {args.recipe} needs parameters {missing}")
    e = enhancement.instantiate_recipe(
        args.recipe, {k: params[k] for k in recipe.free_params}, args.tol
    )
    word = BraidWord.parse(args.word, strands=args.strands)
    value = enhancement.link_polynomial(e, word, args.tol)
    report = _base_report(args, "linkpoly")
    report.update({
        "recipe": args.recipe,
        "word": str(word),
        "strands": word.strands,
        "writhe": enhancement.writhe(word),
        "value": _cnum(value),
    })
    return _emit(args, report, failed=False)


def cmd_enhance(args) -> int:
    r, echo = resolve_operator(args)
    solutions = enhancement.solve_enhancement(
        r, args.tol, starts=args.starts, seed=args.seed
    )
    report = _base_report(args, "enhance")
    report["operator"] = echo
    report["families"] = [
        {
            "mu": [_cnum(c) for c in s.mu_coeffs()],
            "x": _cnum(s.x),
            "y": _cnum(s.y),
        }
        for s in sorted(
            solutions, key=lambda s: tuple(np.round(np.array(s.mu_coeffs()).view(float), 6))
        )
    ]
    report["count"] = len(solutions)
    return _emit(args, report, failed=False)


def cmd_epower(args) -> int:
    r, echo = resolve_operator(args)
    report = _base_report(args, "epower")
    report["operator"] = echo
    quad = entangling_power.entangling_power_quadrature(r, nodes=args.nodes)
    report["quadrature"] = quad
    failed = False
    if is_xtype(r, args.tol):
        closed = entangling_power.entangling_power_closed(r)
        report["closed"] = closed
        report["difference"] = abs(closed - quad)
        failed = report["difference"] > args.tol
    elif args.closed_only:
        raise UsageError("closed form requested for a non-X-type operator")
    if args.mc:
        report["monte_carlo"] = entangling_power.entangling_power_monte_carlo(
            r, samples=args.mc, seed=args.seed
        )
    return _emit(args, report, failed)


def cmd_classify(args) -> int:
    if not args.cls:
        raise UsageError("classify needs --class")
    yang_baxter.catalog_entry(args.cls)  # unknown id -> usage error
    try:
        result = hietarinta.classify(args.cls)
    except KeyError:
        report = _base_report(args, "classify")
        report["entry"] = args.cls
        report["family"] = "unclassified"
        report["hint"] = "no stored recipe; check the id against `catalog`"
        return max(_emit(args, report, failed=True), CHECK_FAILED)
    report = _base_report(args, "classify")
    report.update(result)
    if args.params:
        recipe = next(
            (r_ for r_ in hietarinta.RECIPE_TABLE if r_.source == args.cls
             or r_.target == args.cls),
            None,
        )
        if recipe is not None:
            base = _parse_params(args.params)
            report["recipe_residual"] = hietarinta.verify_recipe(recipe, base)
    return _emit(args, report, failed=False)


def cmd_orbit(args) -> int:
    r, echo = resolve_operator(args)
    if not is_xtype(r, args.tol):
        raise UsageError("orbit analysis addresses X-type operators")
    h = [r[0, 0], r[0, 3], r[1, 1], r[1, 2], r[2, 1], r[2, 2], r[3, 0], r[3, 3]]
    rank, gen_report = yang_baxter.lie_orbit_rank(h)
    report = _base_report(args, "orbit")
    report["operator"] = echo
    report["rank"] = rank
    report["generators"] = gen_report
    return _emit(args, report, failed=False)


def cmd_report_all(args) -> int:
    """Regenerate the battery of per-class golden reports into a directory."""
    rng = np.random.default_rng(args.seed)
    os.makedirs(args.outdir, exist_ok=True)
    battery = {}
    for eid, entry in CATALOG.items():
        params = entry.random_params(rng)
        h = entry.fill(params)
        r = assemble(h)
        residual, ok = yang_baxter.check_ybe(r, args.tol)
        eig = invariants.class_eigen_report(entry, params, args.tol)
        item = {
            "params": {k: _cnum(v) for k, v in params.items()},
            "ybe_residual": residual,
            "ybe_pass": ok,
            "eigen_report_pass": eig.passed,
            "invariants": invariants.quadratic_invariants(r).to_json(),
        }
        if entry.variant_id == 0:
            ep = entangling_power.class_epower(entry, params, args.tol)
            item["epower"] = {"formula": ep["formula"], "closed": ep["closed"],
                              "difference": ep["difference"]}
        battery[eid] = item
    path = os.path.join(args.outdir, "catalog_report.json")
    with open(path, "w") as fh:
        json.dump(_jsonable({"seed": args.seed, "tolerance": args.tol,
                             "entries": battery}), fh, indent=2, sort_keys=True)
    print(f"wrote {path}")
    failed = not all(v["ybe_pass"] and v["eigen_report_pass"] for v in battery.values())
    return CHECK_FAILED if failed else 0


def _add_operator_flags(p: argparse.ArgumentParser):
    p.add_argument("--class", dest="cls", help="catalog id, e.g. C3.0")
    p.add_argument("--xtype", help="eight comma-separated complex h values")
    p.add_argument("--hietarinta", help="family name, e.g. 'H1,3'")
    p.add_argument("--matrix", help="4x4 matrix as JSON rows of [re,im]")
    p.add_argument("--params", help="comma-separated name=value assignments")


def _add_common_flags(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--csv", action="store_true", help="emit CSV rows")
    p.add_argument("--tol", type=float,
                   default=float(os.environ.get("BRAIDGATE_TOL", DEFAULT_TOL)),
                   help="comparison tolerance")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidgate",
        description="Braiding two-qubit gates: catalog, invariants, links, entangling power",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("catalog", help="list catalog classes or Hietarinta families")
    p.add_argument("--class", dest="cls", help="restrict to one class number")
    p.add_argument("--hietarinta", dest="hietarinta_list", action="store_true",
                   help="list the Hietarinta families instead")
    _add_common_flags(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="Yang-Baxter and enhancement checks")
    _add_operator_flags(p)
    p.add_argument("--enhancements", action="store_true",
                   help="also verify every enhancement recipe of the class")
    _add_common_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invariants", help="linear and quadratic local invariants")
    _add_operator_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("linkpoly", help="evaluate the link polynomial of a braid word")
    p.add_argument("--recipe", required=True, help="enhancement recipe id, e.g. C1.I")
    p.add_argument("--params", help="recipe parameters, e.g. h1=1,h4=2,h5=2")
    p.add_argument("--word", required=True, help='braid word, e.g. "s1^3 s2^-1"')
    p.add_argument("--strands", type=int, help="strand count (default: inferred)")
    _add_common_flags(p)
    p.set_defaults(func=cmd_linkpoly)

    p = sub.add_parser("enhance", help="solve for all (mu, x, y) enhancements")
    _add_operator_flags(p)
    p.add_argument("--starts", type=int, default=200, help="solver restarts")
    _add_common_flags(p)
    p.set_defaults(func=cmd_enhance)

    p = sub.add_parser("epower", help="entangling power (closed form and quadrature)")
    _add_operator_flags(p)
    p.add_argument("--nodes", type=int, default=16, help="quadrature nodes per angle")
    p.add_argument("--mc", type=int, default=0,
                   help="also run a Monte Carlo cross-check with this many samples")
    p.add_argument("--closed-only", action="store_true",
                   help="fail rather than fall back to quadrature on non-X input")
    _add_common_flags(p)
    p.set_defaults(func=cmd_epower)

    p = sub.add_parser("classify", help="map a catalog entry to its Hietarinta family")
    p.add_argument("--class", dest="cls", help="catalog id, e.g. C12.0")
    p.add_argument("--params", help="parameters for a residual check of the stored recipe")
    _add_common_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbit", help="local-algebra orbit rank of an X-type operator")
    _add_operator_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("report-all", help="regenerate golden catalog reports")
    p.add_argument("--outdir", default="reports", help="output directory")
    _add_common_flags(p)
    p.set_defaults(func=cmd_report_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if not getattr(args, "json", False) and not getattr(args, "csv", False):
        print(f"[{time.monotonic() - start:.3f}s]", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
