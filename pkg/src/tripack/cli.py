"""Command-line interface: ``tripack {solve,verify,oracle,gen,triangles}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .generator import MODES, GenSpec, generate
from .graph import (
    InvalidGraphError,
    NotBilaterallyComplete,
    PreconditionError,
    TripartiteGraph,
    enumerate_triangles,
    is_packing,
    is_transversal,
    validate,
)
from .graphfile import (
    GraphFileError,
    parse_edge_list,
    parse_graph,
    parse_triangle_list,
    serialize_graph,
)
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    brute_max_packing,
    brute_min_transversal,
    mao_cheng_min,
    uniform_transversal_min,
)
from .solver import solve

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INVALID = 4
EXIT_NOT_BILATERAL = 5
EXIT_BUDGET = 6
EXIT_MISMATCH = 7


def _edge(e) -> str:
    return f"{e[0]}-{e[1]}"


def _tri(t) -> str:
    return f"{t[0]}-{t[1]}-{t[2]}"


def _emit(args, doc: dict, human: list[str]) -> None:
    if args.machine:
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(human) + "\n")


def _load(path: str) -> TripartiteGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def cmd_solve(args) -> int:
    g = _load(args.graph)
    cert = solve(g)
    trace = cert.trace
    assert trace is not None
    if args.export_network:
        Path(args.export_network).write_text(trace.network.export_arcs(), encoding="utf-8")
    doc = {"command": "solve", "apex": trace.orientation.apex, **cert.as_dict(),
           "separator": trace.separator.labels,
           "matchings": [[list(e) for e in cls] for cls in trace.colouring.classes]}
    status = "ok" if cert.verified else "FAILED"
    human = [
        f"value: {cert.value}",
        f"apex part: {trace.orientation.apex}",
        f"transversal ({len(cert.transversal)}): {' '.join(map(_edge, cert.transversal))}",
        f"packing ({len(cert.packing)}): {' '.join(map(_tri, cert.packing))}",
        f"checks: transversal {'ok' if cert.transversal_ok else 'FAILED'}, "
        f"packing {'ok' if cert.packing_ok else 'FAILED'}, "
        f"sizes {'equal' if cert.sizes_equal else 'DIFFER'} -> {status}",
    ]
    _emit(args, doc, human)
    return EXIT_OK if cert.verified else EXIT_MISMATCH


def cmd_verify(args) -> int:
    g = _load(args.graph)
    if not (args.transversal or args.packing):
        raise ValueError("verify needs --transversal FILE and/or --packing FILE")
    doc: dict = {"command": "verify"}
    human = []
    ok = True
    for kind, path, parse, check in (
            ("transversal", args.transversal, parse_edge_list, is_transversal),
            ("packing", args.packing, parse_triangle_list, is_packing)):
        if not path:
            continue
        items = parse(Path(path).read_text(encoding="utf-8"))
        try:
            accepted = check(g, items)
            reason = "" if accepted else (
                "some triangle is not covered" if kind == "transversal" else "two triangles share an edge")
        except PreconditionError as exc:
            accepted, reason = False, str(exc)
        ok &= accepted
        doc[kind] = {"size": len(items), "accepted": accepted, "reason": reason}
        human.append(f"{kind}: {'accepted' if accepted else 'REJECTED'} ({len(items)} items)"
                     + (f": {reason}" if reason else ""))
    _emit(args, doc, human)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_oracle(args) -> int:
    g = _load(args.graph)
    budget = OracleBudget.parse(args.budget) if args.budget else OracleBudget()
    wanted = {"packing": args.packing, "transversal": args.transversal,
              "uniform": args.uniform, "mao_cheng": args.mao_cheng}
    if args.all or not any(wanted.values()):
        wanted = dict.fromkeys(wanted, True)
    if args.enumerate_min:
        wanted["transversal"] = True
    bilateral = validate(g).bilaterally_complete
    values: dict[str, int] = {}
    doc: dict = {"command": "oracle", "bilaterally_complete": bilateral}
    human = []
    if bilateral:
        values["solve"] = solve(g).value
    if wanted["packing"]:
        values["brute_max_packing"] = brute_max_packing(g, budget).value
    if wanted["transversal"]:
        res = brute_min_transversal(g, budget, enumerate_all=args.enumerate_min)
        values["brute_min_transversal"] = res.value
        if res.all_minimum is not None:
            doc["minimum_transversals"] = [[list(e) for e in t] for t in res.all_minimum]
            human.append(f"minimum transversals ({len(res.all_minimum)}):")
            human += ["  " + " ".join(map(_edge, t)) for t in res.all_minimum]
    if bilateral and wanted["uniform"]:
        values["uniform_transversal_min"] = uniform_transversal_min(g, budget)
    if bilateral and wanted["mao_cheng"]:
        values["mao_cheng_min"] = mao_cheng_min(g, budget)
    human = [f"{name}: {value}" for name, value in values.items()] + human

    if bilateral:
        agree = len(set(values.values())) == 1
        verdict = (f"agreement: all {len(values)} values equal {next(iter(values.values()))}"
                   if agree else "agreement: MISMATCH")
    elif "brute_max_packing" in values and "brute_min_transversal" in values:
        nu, tau = values["brute_max_packing"], values["brute_min_transversal"]
        agree = nu <= tau <= 3 * nu
        verdict = f"not bilaterally-complete; bound {nu} <= {tau} <= {3 * nu}: {'holds' if agree else 'FAILS'}"
    else:
        agree = True
        verdict = "not bilaterally-complete; no cross-check requested"
    doc.update(values=values, agree=agree)
    human.append(verdict)
    _emit(args, doc, human)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_gen(args) -> int:
    spec = GenSpec(args.p, args.q, args.r, args.density, args.mode,
                   args.ab_density, args.ac_density, args.seed)
    g = generate(spec)
    comment = (f"generated: p={spec.p} q={spec.q} r={spec.r} mode={spec.mode} "
               f"bc_density={spec.bc_density} ab_density={spec.ab_density} "
               f"ac_density={spec.ac_density} seed={spec.seed}")
    text = serialize_graph(g, comment)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_triangles(args) -> int:
    g = _load(args.graph)
    triangles = enumerate_triangles(g)
    doc = {"command": "triangles", "count": len(triangles), "triangles": [list(t) for t in triangles]}
    _emit(args, doc, [f"{len(triangles)} triangles"] + [_tri(t) for t in triangles])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripack",
        description="Equal-size minimum triangle transversals and maximum triangle "
                    "packings for tripartite graphs with two complete sides.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="emit JSON on stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="construct and verify a certificate")
    p.add_argument("graph")
    p.add_argument("--export-network", metavar="FILE",
                   help="write the split network as 'tail head capacity' lines")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="check a transversal and/or packing file")
    p.add_argument("graph")
    p.add_argument("--transversal", metavar="FILE", help="edges as u-v tokens")
    p.add_argument("--packing", metavar="FILE", help="triangles as a-b-c tokens")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="run brute-force baselines against solve")
    p.add_argument("graph")
    p.add_argument("--all", action="store_true", help="run every baseline (default)")
    p.add_argument("--packing", action="store_true")
    p.add_argument("--transversal", action="store_true")
    p.add_argument("--uniform", action="store_true")
    p.add_argument("--mao-cheng", action="store_true")
    p.add_argument("--enumerate-min", action="store_true",
                   help="list every minimum transversal")
    p.add_argument("--budget", metavar="SPEC",
                   help="e.g. triangles=40,bc_edges=14,bc_vertices=14,seconds=30")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a seeded random graph file")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--density", type=float, default=1.0, help="BC edge probability")
    p.add_argument("--mode", choices=MODES, default="bilateral")
    p.add_argument("--ab-density", type=float, default=1.0)
    p.add_argument("--ac-density", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("triangles", parents=[common], help="list all triangles")
    p.add_argument("graph")
    p.set_defaults(func=cmd_triangles)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphFileError as exc:
        code, msg = EXIT_PARSE, f"parse error: {exc}"
    except InvalidGraphError as exc:
        code, msg = EXIT_INVALID, str(exc)
    except NotBilaterallyComplete as exc:
        code, msg = EXIT_NOT_BILATERAL, f"not bilaterally-complete: {exc}"
    except BudgetExceeded as exc:
        code, msg = EXIT_BUDGET, f"budget exceeded: {exc}"
    except ValueError as exc:
        code, msg = EXIT_USAGE, f"error: {exc}"
    except OSError as exc:
        code, msg = EXIT_IO, f"error: {exc}"
    print(f"tripack: {msg}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
