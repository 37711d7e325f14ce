"""Command-line front end with machine-readable, reproducible reports.

Exit codes: 0 success/true, 1 input error, 2 unsolvable/false,
3 solvable but no constructive method, 4 cut violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__, counterex, cuts, equiv, mvpoly, synth
from .errors import CutViolation, LincompError
from .code import is_solution, parse_code, parse_target, simulate
from .ff import field_descriptor
from .netmodel import parse_network

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FALSE = 2
EXIT_NO_CONSTRUCTOR = 3
EXIT_CUT = 4


def _digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _report(command: str, inputs, result, seed=None) -> dict:
    return {
        "command": command,
        "inputs": {p: _digest(p) for p in inputs},
        "result": result,
        "seed": seed,
        "tool_version": __version__,
    }


def _emit(report: dict, out: str | None):
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_network(path: str):
    return parse_network(Path(path).read_text())


def cmd_validate(args) -> int:
    net = _load_network(args.network)
    result = {"nodes": len(net.nodes), "sources": net.s,
              "edges": len(net.edges), "receiver": net.receiver}
    _emit(_report("validate", [args.network], result), args.out)
    return EXIT_OK


def cmd_mincut(args) -> int:
    net = _load_network(args.network)
    target = parse_target(Path(args.target).read_text())
    rep = cuts.mincut_ratio(net, target)
    result = {
        "value": {"num": rep.value.numerator, "den": rep.value.denominator},
        "witness": list(rep.witness_edges),
        "separated": list(rep.separated),
    }
    _emit(_report("mincut", [args.network, args.target], result), args.out)
    return EXIT_OK


def cmd_groebner_test(args) -> int:
    net = _load_network(args.network)
    target = parse_target(Path(args.target).read_text())
    verdict, basis = mvpoly.solvable(net, target, order=args.order)
    result = {"verdict": verdict.value, "basis_size": len(basis), "pinned": []}
    _emit(_report("groebner-test", [args.network, args.target], result), args.out)
    if args.dump_basis:
        ideal = mvpoly.symbolic_transfer(net, target)
        lines = [mvpoly.poly_str(g, ideal.indeterminates) for g in basis]
        Path(args.dump_basis).write_text("\n".join(lines) + "\n")
    return EXIT_OK if verdict == mvpoly.Verdict.SOLVABLE else EXIT_FALSE


def cmd_classify(args) -> int:
    target = parse_target(Path(args.target).read_text())
    cls, eq = equiv.classify(target)
    result = {
        "class": cls.value,
        "Q": [list(r) for r in eq.Q],
        "Pi": list(eq.perm),
        "P": [list(r) for r in eq.P],
    }
    _emit(_report("classify", [args.target], result), args.out)
    return EXIT_OK


def cmd_synthesize(args) -> int:
    net = _load_network(args.network)
    target = parse_target(Path(args.target).read_text())
    try:
        outcome = synth.synthesize(net, target, seed=args.seed)
    except CutViolation as exc:
        result = {"status": "cut-violation",
                  "witness": list(exc.witness or ()),
                  "separated": list(exc.separated or ())}
        _emit(_report("synthesize", [args.network, args.target], result,
                      seed=args.seed), args.out)
        return EXIT_CUT
    if isinstance(outcome, synth.SynthVerdict):
        if outcome.verdict == mvpoly.Verdict.UNSOLVABLE:
            status, rc = "unsolvable", EXIT_FALSE
        else:
            status, rc = "solvable-no-constructor", EXIT_NO_CONSTRUCTOR
        result = {"status": status, "basis_size": outcome.basis_size}
        _emit(_report("synthesize", [args.network, args.target], result,
                      seed=args.seed), args.out)
        return rc
    result = {
        "status": "solved",
        "method": outcome.method.value,
        "n": outcome.n,
        "attempts": outcome.attempts,
        "field": field_descriptor(outcome.code.field),
    }
    if args.code_out:
        Path(args.code_out).write_text(outcome.code.serialize() + "\n")
        result["code_file"] = args.code_out
    else:
        result["code"] = outcome.code.to_dict()
    _emit(_report("synthesize", [args.network, args.target], result,
                  seed=args.seed), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    net = _load_network(args.network)
    target = parse_target(Path(args.target).read_text())
    code = parse_code(Path(args.code).read_text())
    ok = is_solution(net, code, target)
    exhaustive = None
    fld = code.field
    if ok and fld.order ** net.s <= 4096:
        exhaustive = True
        elems = list(fld.elements())
        from itertools import product
        for msgs in product(elems, repeat=net.s):
            got = simulate(net, code, list(msgs), l=target.l)
            want = [
                sum((fld.elem(target.rows[j][t]) * msgs[t]
                     for t in range(net.s)), fld.zero())
                for j in range(target.l)
            ]
            if got != want:
                exhaustive = False
                ok = False
                break
    result = {"is_solution": ok, "exhaustive_check": exhaustive}
    _emit(_report("verify", [args.network, args.target, args.code], result),
          args.out)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_counterexample(args) -> int:
    target = parse_target(Path(args.target).read_text())
    bundle = counterex.build_np(target)
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "network.json").write_text(bundle.network.serialize() + "\n")
    (outdir / "target.json").write_text(
        json.dumps(target.to_dict(), sort_keys=True) + "\n")
    rep = cuts.mincut_ratio(bundle.network, target)
    report = _report("counterexample", [args.target], {
        "mincut": {"num": rep.value.numerator, "den": rep.value.denominator},
        "verdict": "unsolvable",
        "construction": bundle.construction_dict(),
    })
    (outdir / "report.json").write_text(
        json.dumps(report, sort_keys=True, indent=2) + "\n")
    _emit(report, args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    net = _load_network(args.network)
    code = parse_code(Path(args.code).read_text())
    raw = json.loads(args.messages)
    msgs = [code.field.elem(m) for m in raw]
    out = simulate(net, code, msgs)
    result = {"output": [v.to_list() for v in out]}
    _emit(_report("simulate", [args.network, args.code], result), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lincomp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *, network=False, target=False, code=False):
        p = sub.add_parser(name)
        if network:
            p.add_argument("--network", required=True)
        if target:
            p.add_argument("--target", required=True)
        if code:
            p.add_argument("--code", required=True)
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, network=True)
    add("mincut", cmd_mincut, network=True, target=True)
    p = add("groebner-test", cmd_groebner_test, network=True, target=True)
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    p.add_argument("--dump-basis", help="write basis polynomials to this file")
    add("classify", cmd_classify, target=True)
    p = add("synthesize", cmd_synthesize, network=True, target=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--code-out", help="write the synthesized code here")
    add("verify", cmd_verify, network=True, target=True, code=True)
    p = add("counterexample", cmd_counterexample, target=True)
    p.add_argument("--out-dir", required=True)
    p = add("simulate", cmd_simulate, network=True, code=True)
    p.add_argument("--messages", required=True,
                   help="JSON list of field elements (ints or coefficient lists)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LincompError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
