"""Command-line interface: count, census, pcurv, verify.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
exhaustion.  With --out PREFIX each command writes PREFIX.csv and/or
PREFIX.json plus PREFIX.manifest.json; --manifest FILE re-runs the
computation parameters recorded in an earlier manifest (primary outputs
are byte-identical across replays, timestamps live only in manifests).
"""

from __future__ import annotations

import argparse
import json
import sys

from ramlab import __version__
from ramlab.census import DEFAULT_BUDGET, census
from ramlab.connections import (
    check_p_trivial_determinant,
    connection_from_dict,
    level,
    p_curvature,
    radius_at,
    residue_matrix,
)
from ramlab.counting import Profile, n_gen_chain, n_gen_chain_enum_count, n_gen_recursive
from ramlab.ratmaps import RamProfile
from ramlab.records import (
    CENSUS_FIELDS,
    COUNT_FIELDS,
    RunManifest,
    VerificationReport,
    census_record,
    count_record,
    representatives_json,
    rows_to_csv,
)
from ramlab.verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

COUNT_METHODS = ("recursive", "chain-dp", "chain-enum")


def _parse_int_list(text: str, what: str):
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise ValueError(f"{what} must be a comma-separated integer list, got {text!r}")


def _parse_points(text: str):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "":
            continue
        if tok == "inf":
            out.append(None)
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise ValueError(f"point {tok!r} is neither an integer nor 'inf'")
    return out


def _write_outputs(out_prefix, manifest: RunManifest, csv_text=None, json_doc=None):
    if out_prefix is None:
        return
    if csv_text is not None:
        with open(out_prefix + ".csv", "w") as fh:
            fh.write(csv_text)
    if json_doc is not None:
        with open(out_prefix + ".json", "w") as fh:
            json.dump(json_doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    manifest.save(out_prefix + ".manifest.json")


def _params(args, manifest_keys):
    """Parameter dict for the manifest, or the replayed one from --manifest."""
    if args.manifest:
        loaded = RunManifest.load(args.manifest)
        if loaded.command != args.command:
            raise ValueError(
                f"manifest records command {loaded.command!r}, not {args.command!r}")
        return loaded.params
    return {k: getattr(args, k.replace("-", "_")) for k in manifest_keys}


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_count(args) -> int:
    params = _params(args, ("p", "profile", "method"))
    if params["p"] is None or params["profile"] is None:
        raise ValueError("count needs --p and --profile")
    p = int(params["p"])
    entries = _parse_int_list(str(params["profile"]), "--profile")
    method = params["method"]
    profile = Profile(p, entries)
    methods = COUNT_METHODS if method == "all" else (method,)
    rows = []
    values = {}
    for m in methods:
        if m == "recursive":
            v = n_gen_recursive(profile)
        elif m == "chain-dp":
            v = n_gen_chain(profile, mode="count")
        elif m == "chain-enum":
            v = n_gen_chain_enum_count(profile)
        else:
            raise ValueError(f"unknown method {m!r}")
        values[m] = v
        rows.append(count_record(p, entries, m, v))
        print(f"p={p} profile={'-'.join(map(str, entries))} method={m} count={v}")
    manifest = RunManifest("count", params)
    json_doc = {"records": rows}
    agree = len(set(values.values())) == 1
    if method == "all":
        report = VerificationReport("count-methods")
        report.add(f"methods agree on p={p} profile={entries}",
                   values["recursive"], values, "cross-method",
                   ok=agree)
        json_doc["verification"] = json.loads(report.to_json())
        if not agree:
            for line in report.lines():
                print(line, file=sys.stderr)
    _write_outputs(args.out, manifest, csv_text=rows_to_csv(rows, COUNT_FIELDS),
                   json_doc=json_doc)
    return EXIT_OK if agree else EXIT_VERIFY_FAIL


def cmd_census(args) -> int:
    params = _params(args, ("p", "points", "orders", "k", "kmax", "budget", "method"))
    for key in ("p", "points", "orders"):
        if params[key] is None:
            raise ValueError(f"census needs --{key}")
    p = int(params["p"])
    points = _parse_points(str(params["points"]))
    orders = _parse_int_list(str(params["orders"]), "--orders")
    profile = RamProfile(p, points, orders)
    budget = int(params["budget"])
    ks = range(1, int(params["kmax"]) + 1) if params.get("kmax") else [int(params["k"])]
    rows, results = [], []
    for k in ks:
        res = census(p, k, profile, budget=budget, method=params["method"])
        results.append(res)
        rows.append(census_record(res))
        print(f"p={p} k={k} points={rows[-1]['points']} orders={rows[-1]['orders']} "
              f"orbit_count={res.orbit_count} raw_count={res.raw_count} status={res.status}")
    manifest = RunManifest("census", params)
    _write_outputs(args.out, manifest, csv_text=rows_to_csv(rows, CENSUS_FIELDS),
                   json_doc={"results": [representatives_json(r) for r in results]})
    if any(not r.complete for r in results):
        print("budget exhausted: counts above are not totals", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_pcurv(args) -> int:
    params = _params(args, ("connection_file",))
    path = params["connection_file"]
    if path is None:
        raise ValueError("pcurv needs a connection file")
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"connection file is not valid JSON: {exc}")
    conn = connection_from_dict(data)
    psi = p_curvature(conn)
    doc = {
        "p": conn.p,
        "points": list(conn.points),
        "splitting": list(conn.splitting),
        "residues": [],
        "radii": [],
        "p_trivial_determinant": check_p_trivial_determinant(conn),
        "dormant": psi.is_zero(),
    }
    print(f"p = {conn.p}, marked points = {list(conn.points)}, "
          f"splitting = {conn.splitting}")
    for P in conn.points:
        R = residue_matrix(conn, P)
        rad = radius_at(conn, P)
        doc["residues"].append({"point": P, "matrix": [list(r) for r in R.entries]})
        doc["radii"].append({
            "point": P, "rho_squared": rad.rho_squared, "rho": rad.rho,
            "non_split": rad.non_split, "residue_nonzero": rad.residue_nonzero,
        })
        rho = "non-split" if rad.non_split else str(rad.rho)
        print(f"  residue at {P}: {R.entries}  rho^2={rad.rho_squared} rho={rho} "
              f"residue_nonzero={rad.residue_nonzero}")
    print(f"p-trivial determinant: {doc['p_trivial_determinant']}")
    print(f"dormant (p-curvature = 0): {doc['dormant']}")
    lv = level(conn)
    doc["level"] = {"two_ell": lv.two_ell, "indigenous": lv.indigenous}
    print(f"level: 2l = {lv.two_ell}" + (" (indigenous)" if lv.indigenous else ""))
    if lv.ks is not None:
        doc["level"]["kodaira_spencer_nonzero"] = lv.ks.nonzero
        doc["level"]["kodaira_spencer_iso_at"] = list(lv.ks.iso_at)
        print(f"kodaira-spencer: nonzero={lv.ks.nonzero} iso_at={lv.ks.iso_at}")
    manifest = RunManifest("pcurv", params)
    _write_outputs(args.out, manifest, json_doc=doc)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = _params(args, ("suite", "p", "max_n", "samples"))
    if params["suite"] is None:
        raise ValueError("verify needs --suite")
    ps = _parse_int_list(str(params["p"]), "--p") if params.get("p") else None
    report = run_suite(params["suite"], ps=ps, max_n=params.get("max_n"),
                       samples=params.get("samples"))
    for line in report.lines():
        print(line)
    manifest = RunManifest("verify", params)
    _write_outputs(args.out, manifest, json_doc=json.loads(report.to_json()))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ramlab",
        description="Exact counts and censuses of tame self-maps of P^1, and a "
                    "characteristic-p lab for rank-2 logarithmic connections.")
    ap.add_argument("--version", action="version", version=f"ramlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="evaluate the ramification count of a profile")
    c.add_argument("--p", type=int)
    c.add_argument("--profile", help="comma-separated ramification indices, e.g. 3,3,3")
    c.add_argument("--method", choices=COUNT_METHODS + ("all",), default="all")
    c.add_argument("--out")
    c.add_argument("--manifest")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("census", help="brute-force census over GF(p^k)")
    c.add_argument("--p", type=int)
    c.add_argument("--points", help="comma-separated points; 'inf' allowed, e.g. 0,1,inf")
    c.add_argument("--orders", help="comma-separated ramification orders, e.g. 3,3,3")
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--kmax", type=int, help="sweep k = 1..kmax instead of a single k")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.add_argument("--method", choices=("pruned", "exhaustive"), default="pruned")
    c.add_argument("--out")
    c.add_argument("--manifest")
    c.set_defaults(func=cmd_census)

    c = sub.add_parser("pcurv", help="analyze a logarithmic connection file")
    c.add_argument("connection_file", nargs="?")
    c.add_argument("--out")
    c.add_argument("--manifest")
    c.set_defaults(func=cmd_pcurv)

    c = sub.add_parser("verify", help="run a named verification suite")
    c.add_argument("--suite", choices=sorted(SUITES))
    c.add_argument("--p", help="comma-separated primes, e.g. 3,5,7")
    c.add_argument("--max-n", type=int, dest="max_n")
    c.add_argument("--samples", type=int)
    c.add_argument("--out")
    c.add_argument("--manifest")
    c.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
