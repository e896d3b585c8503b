"""Command-line front end.

Every command emits one record ``{command, params, results, method,
version}`` as JSON (default) or a CSV table with a header row.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from . import verify as verify_mod
from .autranks import VARIANTS, aut_rank_closed, aut_rank_homology
from .errors import AutlieError, ContractViolation, ResourceLimitError
from .freelie import Caps, GeneratorSpec, left_normed_rank, witt_dim
from .homotopylie import epsilon_closed, epsilon_from_pbw, quotient_dims
from .mtheta import GeneratorSpecMT, loopspace_generators, omega_mt_betti
from .stability import range_report

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _jsonable(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _methods(method, allowed):
    return list(allowed) if method == "all" else [method]


def cmd_witt(args, caps):
    spec = GeneratorSpec.for_manifold(args.n, args.d)
    methods = _methods(args.method, ("closed", "oracle"))
    rows = []
    for r in range(1, args.rmax + 1):
        row = {"r": r}
        if "closed" in methods:
            row["closed"] = witt_dim(spec, r)
        if "oracle" in methods:
            row["oracle"] = left_normed_rank(spec, r, caps)
        rows.append(row)
    agree = all(len({v for k, v in row.items() if k != "r"}) == 1 for row in rows)
    results = {"eta": [row[methods[0]] for row in rows], "rows": rows}
    if len(methods) > 1:
        results["agree"] = agree
    return results, rows, _provenance(methods), agree


def _provenance(methods):
    if len(methods) > 1:
        return "both"
    return "oracle" if methods[0] in ("oracle", "homology") else "closed-form"


def cmd_epsilon(args, caps):
    parity = args.d % 2
    methods = _methods(args.method, ("closed", "pbw", "oracle"))
    rows = [{"r": r} for r in range(1, args.rmax + 1)]
    if "closed" in methods:
        for row in rows:
            row["closed"] = epsilon_closed(args.n, parity, row["r"])
    if "pbw" in methods:
        pbw = epsilon_from_pbw(args.n, parity, args.rmax)
        for row in rows:
            row["pbw"] = pbw[row["r"]]
    if "oracle" in methods:
        m = verify_mod.sample_model(args.n, args.d)
        if m is None:
            raise ContractViolation(
                f"no invertible intersection form of rank {args.n} for odd d; oracle unavailable")
        dims = quotient_dims(m, args.rmax, caps)
        for row in rows:
            row["oracle"] = dims[row["r"]]
    agree = all(len({v for k, v in row.items() if k != "r"}) == 1 for row in rows)
    results = {"epsilon": [row[methods[0]] for row in rows], "rows": rows}
    if len(methods) > 1:
        results["agree"] = agree
    method = "both" if len(methods) > 1 else ("oracle" if methods[0] == "oracle" else "closed-form")
    return results, rows, method, agree


def cmd_aut_ranks(args, caps):
    from .homotopylie import ManifoldModel
    m = ManifoldModel.hyperbolic(args.g, args.d)
    variants = list(VARIANTS) if args.variant == "all" else [args.variant]
    methods = _methods(args.method, ("closed", "homology"))
    rows = []
    agree = True
    for r in range(1, args.rmax + 1):
        for v in variants:
            row = {"r": r, "degree": r * (args.d - 1), "variant": v}
            if "closed" in methods:
                row["closed"] = aut_rank_closed(m.n, m.d, r, v)
            if "homology" in methods:
                row["homology"] = aut_rank_homology(m, r, v, caps)
            if len(methods) > 1 and row["closed"] != row["homology"]:
                agree = False
            rows.append(row)
    results = {"n": m.n, "rows": rows}
    if len(methods) > 1:
        results["agree"] = agree
    return results, rows, _provenance(methods), agree


def cmd_mt_betti(args, caps):
    spec = GeneratorSpecMT(args.d, args.cutoff)
    gens = loopspace_generators(spec)
    betti = omega_mt_betti(spec).integers()
    by_degree = {}
    for name, deg in gens:
        by_degree.setdefault(deg, []).append(name)
    generators = [{"degree": deg, "multiplicity": len(names), "monomials": names}
                  for deg, names in sorted(by_degree.items())]
    results = {"base_generators": [{"name": n, "degree": d} for n, d in spec.base_generators],
               "generators": generators, "betti": betti}
    rows = [{"degree": k, "betti": b} for k, b in enumerate(betti)]
    return results, rows, "closed-form", True


def cmd_stability(args, caps):
    rep = range_report(args.d, args.g, args.kmax)
    results = {
        "stable_bound": rep.stable_bound,
        "max_stable_k": rep.max_stable_k,
        "block_pi_ranks": rep.block_pi_ranks,
        "diff_pi_ranks": rep.diff_pi_ranks,
        "charney_connectivity": rep.charney,
    }
    if args.k is not None:
        from .stability import block_quotient_pi_rank, diff_pi_rank
        results["k"] = {"k": args.k, "block_pi_rank": block_quotient_pi_rank(args.d, args.g, args.k),
                        "diff_pi_rank": diff_pi_rank(args.d, args.g, args.k)}
    rows = [{"k": k, "block_pi_rank": rep.block_pi_ranks[k], "diff_pi_rank": rep.diff_pi_ranks[k]}
            for k in rep.block_pi_ranks]
    return results, rows, "closed-form", True


def cmd_verify(args, caps):
    report = verify_mod.run(args.level, fault=args.inject_fault, seed=args.seed, caps=caps)
    rows = [{"name": c["name"], "passed": c["passed"]} for c in report["checks"]]
    return report, rows, "both", report["passed"]


COMMANDS = {
    "witt": cmd_witt,
    "epsilon": cmd_epsilon,
    "aut-ranks": cmd_aut_ranks,
    "mt-betti": cmd_mt_betti,
    "stability": cmd_stability,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="FILE", help="also write the record to FILE")
    common.add_argument("--cap-words", type=int, default=None,
                        help="override the total word cap for tensor-algebra work")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="autlie", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("witt", parents=[common], help="free Lie algebra dimensions")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--rmax", type=int, default=6)
    s.add_argument("--method", choices=("closed", "oracle", "all"), default="closed")

    s = sub.add_parser("epsilon", parents=[common], help="homotopy Lie algebra dimensions")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--rmax", type=int, default=4)
    s.add_argument("--method", choices=("closed", "pbw", "oracle", "all"), default="closed")

    s = sub.add_parser("aut-ranks", parents=[common], help="ranks of pi_*(aut) for M_g")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--rmax", type=int, default=2)
    s.add_argument("--variant", choices=VARIANTS + ("all",), default="closed")
    s.add_argument("--method", choices=("closed", "homology", "all"), default="closed")

    s = sub.add_parser("mt-betti", parents=[common], help="Betti numbers of Omega_0 MT(2d)")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--cutoff", type=int, default=12)

    s = sub.add_parser("stability", parents=[common], help="stable ranges and block ranks")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--kmax", type=int, default=None)

    s = sub.add_parser("verify", parents=[common], help="run the cross-check suites")
    s.add_argument("--level", choices=tuple(verify_mod.LEVELS), default="quick")
    s.add_argument("--inject-fault", choices=("sign",), default=None,
                   help="test mode: corrupt the closed epsilon formula")
    return p


def serialize(record, table, fmt):
    if fmt == "json":
        return json.dumps(_jsonable(record), indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    fields = []
    for row in table:
        for k in row:
            if k not in fields:
                fields.append(k)
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for row in table:
        w.writerow({k: _jsonable(v) for k, v in row.items()})
    return buf.getvalue()


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    caps = Caps(max_words=args.cap_words) if args.cap_words else Caps()
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "format", "out", "cap_words")}
    try:
        results, table, method, ok = COMMANDS[args.command](args, caps)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ContractViolation, AutlieError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    record = {"command": args.command, "params": params, "results": results,
              "method": method, "version": __version__}
    text = serialize(record, table, args.format)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if not ok:
        if args.command == "verify":
            print(f"FAILED: {results['first_failure']}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
