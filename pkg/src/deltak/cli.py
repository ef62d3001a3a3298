"""Batch command-line surface.

All input and output is UTF-8 JSON.  The result object on stdout is
bit-reproducible given (input, seed, version); timings go to stderr.
Exit codes: 0 success, 1 mathematical-contract violation, 2 input error,
3 resource exhaustion.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from ._rat import rat_str
from .ample import is_very_ample
from .classes import k_polytope, k_wedge_qdual, ogr_orbit_class, ogr_y_class
from .dmat import (DeltaMatroid, interlace, load_input, validate_family)
from .engine import (euler_char_HRR, euler_char_X,
                     euler_char_polytope_streamed, interlace_integral_expected,
                     interlace_via_integral, r_poly_orbit, r_poly_y)
from .errors import ContractViolation, InputError, ResourceBudgetExceeded
from .fan import enumerate_W, x_edges
from .laurent import UniPoly
from .selftest import SEED as DEFAULT_SEED
from .selftest import run_all, search_star_failures


@dataclass
class JobConfig:
    command: str
    inputs: list = field(default_factory=list)
    mode: str = ""
    lattice: str = "standard"
    theorem: str = ""
    n: int = 0
    jobs: int = 1
    directions: int = 3
    seed: int = DEFAULT_SEED
    max_pairs: int = 200000
    member_budget: int = 500000
    output: str = ""
    long_running: bool = False


def _poly_json(p):
    return p.to_json()


def _laurent_json(f):
    return {"terms": [[list(m), rat_str(c)] for m, c in f.sorted_terms()]}


def _emit(cfg, payload, t0):
    report = {"command": cfg.command, "seed": cfg.seed}
    report.update(payload)
    text = json.dumps(report, indent=2, sort_keys=True)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(f"[deltak] {cfg.command} finished in {time.time() - t0:.2f}s",
          file=sys.stderr)


def cmd_validate(cfg):
    with open(cfg.inputs[0], encoding="utf-8") as fh:
        data = json.load(fh)
    if "feasible" not in data:
        raise InputError("validate expects a feasible-family JSON input")
    n = int(data["n"])
    family = [frozenset(map(int, S)) for S in data["feasible"]]
    ok, edge = validate_family(n, family)
    payload = {"input": data, "valid": ok}
    if edge is not None:
        payload["violating_edge"] = [sorted(edge[0]), sorted(edge[1])]
    return payload


def cmd_interlace(cfg):
    D = load_input(cfg.inputs[0])
    return {"input": D.to_json(), "Int": _poly_json(interlace(D))}


def cmd_chi(cfg):
    D = load_input(cfg.inputs[0])
    cls = k_polytope(D, doubled=(cfg.mode == "doubled"))
    chi = euler_char_X(cls, seed=cfg.seed, directions=cfg.directions)
    return {"input": D.to_json(), "class": cfg.mode, "chi": chi,
            "directions_agreed": True}


def cmd_rpoly(cfg):
    D = load_input(cfg.inputs[0])
    if cfg.mode == "orbit":
        r = r_poly_orbit(D, seed=cfg.seed, directions=cfg.directions,
                         max_pairs=cfg.max_pairs)
    else:
        r = r_poly_y(D, seed=cfg.seed, directions=cfg.directions)
    return {"input": D.to_json(), "mode": cfg.mode, "R": _poly_json(r),
            "directions_agreed": True}


def cmd_verify(cfg):
    from .dmat import enumerate_all, random_delta_matroids

    checked = 0
    failures = []
    top = cfg.n or 3
    if cfg.theorem == "A":
        for n in range(1, min(top, 3) + 1):
            for D in enumerate_all(n):
                checked += 1
                if r_poly_y(D, seed=cfg.seed) != UniPoly((1, 1)) * interlace(D):
                    failures.append({"D": D.to_json(), "seed": cfg.seed})
        if top >= 4:
            for D in random_delta_matroids(4, seed=cfg.seed, count=200):
                checked += 1
                if r_poly_y(D, seed=cfg.seed) != UniPoly((1, 1)) * interlace(D):
                    failures.append({"D": D.to_json(), "seed": cfg.seed})
    elif cfg.theorem == "B":
        for n in range(1, min(top, 3) + 1):
            for D in enumerate_all(n):
                classes = [k_polytope(D), k_polytope(D, doubled=True)]
                classes += [k_polytope(D) * k_wedge_qdual(D, p)
                            for p in range(n + 2)]
                for cls in classes:
                    checked += 1
                    try:
                        euler_char_HRR(cls, seed=cfg.seed, check=True)
                    except ContractViolation:
                        failures.append({"D": D.to_json(), "seed": cfg.seed})
    elif cfg.theorem == "intersection":
        for n in range(1, min(top, 3) + 1):
            for D in enumerate_all(n):
                checked += 1
                if interlace_via_integral(D, seed=cfg.seed) != \
                        interlace_integral_expected(D):
                    failures.append({"D": D.to_json(), "seed": cfg.seed})
    else:
        raise InputError(f"unknown theorem id {cfg.theorem!r}")
    payload = {"theorem": cfg.theorem, "checked": checked,
               "failures": len(failures)}
    if failures:
        payload["failure_payloads"] = failures
        raise VerifyFailure(payload)
    return payload


class VerifyFailure(ContractViolation):
    def __init__(self, payload):
        super().__init__(f"{payload['failures']} verification failures")
        self.payload = payload


def cmd_polytope_audit(cfg):
    D = load_input(cfg.inputs[0])
    lattice = "vertex-span" if cfg.lattice.startswith("vertex") else "standard"
    ample, gaps = is_very_ample(D, lattice=lattice,
                                member_budget=cfg.member_budget)
    orbit = ogr_orbit_class(D, max_pairs=cfg.max_pairs)
    numerators = {}
    for S in D.sorted_feasible():
        num, dens = orbit.entries[S]
        numerators[",".join(map(str, sorted(S)))] = {
            "numerator": _laurent_json(num),
            "denominators": [list(d) for d in dens]}
    return {"input": D.to_json(), "lattice": lattice, "very_ample": ample,
            "certificates": [{"vertex": sorted(S), "gap_point": list(g)}
                             for S, g in gaps],
            "semigroup_numerators": numerators}


def cmd_classes_dump(cfg):
    if cfg.n and not cfg.inputs:
        if cfg.n > 3:
            raise InputError("moment-graph dump is limited to n <= 3")
        vertices = [list(w.images) for w in enumerate_W(cfg.n)]
        edges = [{"from": list(w.images), "to": list(w2.images),
                  "label": list(label)} for w, w2, label in x_edges(cfg.n)]
        return {"n": cfg.n, "vertices": vertices, "edges": edges}
    D = load_input(cfg.inputs[0])
    if D.n > 3:
        raise InputError("class dumps are limited to n <= 3")
    out = {"input": D.to_json()}
    out["polytope"] = {str(list(w.images)): _laurent_json(num)
                       for w, (num, _) in sorted(
                           k_polytope(D).entries.items(),
                           key=lambda kv: kv[0].images)}
    out["polytope_doubled"] = {str(list(w.images)): _laurent_json(num)
                               for w, (num, _) in sorted(
                                   k_polytope(D, doubled=True).entries.items(),
                                   key=lambda kv: kv[0].images)}
    y = ogr_y_class(D)
    out["y"] = {",".join(map(str, sorted(S))): _laurent_json(num)
                for S, (num, _) in sorted(y.entries.items(),
                                          key=lambda kv: sorted(kv[0]))}
    orbit = ogr_orbit_class(D, max_pairs=cfg.max_pairs)
    out["orbit"] = {",".join(map(str, sorted(S))): {
        "numerator": _laurent_json(num),
        "denominators": [list(d) for d in dens]}
        for S, (num, dens) in sorted(orbit.entries.items(),
                                     key=lambda kv: sorted(kv[0]))}
    return out


def cmd_search_star(cfg):
    n = cfg.n or 3
    if n > 4:
        raise InputError("the search is limited to n <= 4")
    if n == 4 and not cfg.long_running:
        raise InputError("n = 4 sweeps every family; pass --long-running")
    failures = search_star_failures(n, seed=cfg.seed, max_pairs=cfg.max_pairs)
    return {"n": n, "failures": [D.to_json() for D in failures]}


def cmd_selftest(cfg):
    code = run_all()
    if code != 0:
        raise ContractViolation("acceptance criteria failed")
    return {"selftest": "pass"}


def cmd_bench(cfg):
    n = cfg.n or 6
    D = DeltaMatroid(n, [frozenset(i + 1 for i in range(n) if m >> i & 1)
                         for m in range(1 << n)], check=False)
    t0 = time.time()
    chi = euler_char_polytope_streamed(D, seed=cfg.seed, jobs=cfg.jobs)
    elapsed = time.time() - t0
    return {"n": n, "jobs": cfg.jobs, "chi": chi,
            "fixed_points": _w_count(n), "seconds": round(elapsed, 2)}


def _w_count(n):
    from .fan import w_count
    return w_count(n)


COMMANDS = {
    "validate": cmd_validate,
    "interlace": cmd_interlace,
    "chi": cmd_chi,
    "rpoly": cmd_rpoly,
    "verify": cmd_verify,
    "polytope-audit": cmd_polytope_audit,
    "classes-dump": cmd_classes_dump,
    "search-star": cmd_search_star,
    "selftest": cmd_selftest,
    "bench": cmd_bench,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="deltak",
        description="Exact localization computations for delta-matroid invariants")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=False):
        if needs_input:
            p.add_argument("--input", required=True, help="JSON input path")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--directions", type=int, default=3)
        p.add_argument("--jobs", type=int,
                       default=int(os.environ.get("DELTAK_JOBS", "1")))
        p.add_argument("--max-pairs", type=int, default=200000)
        p.add_argument("--member-budget", type=int, default=500000)
        p.add_argument("--output", default="")

    common(sub.add_parser("validate", help="edge criterion for a family"),
           needs_input=True)
    common(sub.add_parser("interlace", help="interlace polynomial"),
           needs_input=True)
    p = sub.add_parser("chi", help="Euler characteristic of a polytope class")
    p.add_argument("--class", dest="mode", choices=("polytope", "doubled"),
                   default="polytope")
    common(p, needs_input=True)
    p = sub.add_parser("rpoly", help="wedge generating polynomial")
    p.add_argument("--mode", choices=("y", "orbit"), default="y")
    common(p, needs_input=True)
    p = sub.add_parser("verify", help="identity suites")
    p.add_argument("--theorem", choices=("A", "B", "intersection"), required=True)
    p.add_argument("--n", type=int, default=3)
    common(p)
    polytope = sub.add_parser("polytope", help="polytope audits")
    psub = polytope.add_subparsers(dest="subcommand", required=True)
    p = psub.add_parser("audit", help="very-ampleness certificates")
    p.add_argument("--lattice", choices=("standard", "vertex", "vertex-span"),
                   default="standard")
    common(p, needs_input=True)
    classes = sub.add_parser("classes", help="localized class dumps")
    csub = classes.add_subparsers(dest="subcommand", required=True)
    p = csub.add_parser("dump", help="emit localized tuples as JSON")
    p.add_argument("--input", default="")
    p.add_argument("--moment-graph", action="store_true",
                   help="dump the moment graph instead (needs --n)")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--directions", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-pairs", type=int, default=200000)
    p.add_argument("--member-budget", type=int, default=500000)
    p.add_argument("--output", default="")
    p = sub.add_parser("search-star", help="scan for generating-polynomial failures")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--long-running", action="store_true")
    common(p)
    common(sub.add_parser("selftest", help="run the acceptance scoreboard"))
    p = sub.add_parser("bench", help="streamed characteristic benchmark")
    p.add_argument("--n", type=int, default=6)
    common(p)
    return parser


def config_from_args(args):
    cfg = JobConfig(command=args.command)
    if getattr(args, "subcommand", None):
        cfg.command = f"{args.command}-{args.subcommand}"
    for name in ("seed", "directions", "jobs", "output", "mode", "lattice",
                 "theorem", "n", "long_running", "member_budget"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if hasattr(args, "max_pairs"):
        cfg.max_pairs = args.max_pairs
    if getattr(args, "input", ""):
        cfg.inputs = [args.input]
    if getattr(args, "moment_graph", False):
        cfg.inputs = []
    return cfg


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    t0 = time.time()
    try:
        payload = COMMANDS[cfg.command](cfg)
    except VerifyFailure as exc:
        _emit(cfg, exc.payload, t0)
        return 1
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ResourceBudgetExceeded as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return 3
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return 1
    _emit(cfg, payload, t0)
    return 0


if __name__ == "__main__":
    sys.exit(main())
