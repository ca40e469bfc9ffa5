"""Command-line front end: ``coxflag <command> ...``.

Exit status is 0 on success, 1 when a check fails or a formula disagrees
with direct recomputation, and 2 for unreadable or illegal input.
Rationals are always printed exactly as ``p/q`` (integers without ``/1``).
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass

from .charney import check_conjecture_instance, omega
from .complex import (ComplexFormatError, InfiniteCoxeterGroup, build_flag_complex, read_complex,
                      write_complex)
from .coxeter import NotAnEdge
from .homology import homology, is_ghs
from .reduction.deltas import PreconditionViolated
from .reduction.pipeline import reduce_edge, reduce_pipeline

OK, FAILED, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    """Bad command-line input; reported on stderr with exit status 2."""


@dataclass
class CommandResult:
    exit_code: int
    report: tuple  # (json-ready dict, text lines)


def q(x) -> str:
    return str(x)


def _load(path):
    try:
        graph = read_complex(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except ComplexFormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    try:
        return build_flag_complex(graph)
    except InfiniteCoxeterGroup as exc:
        raise InputError(f"{path}: {exc}") from None


def _parse_edge(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2 or not all(p.strip() for p in parts):
        raise InputError(f"--edge expects 'a,b', got {text!r}")
    return tuple(p.strip() for p in parts)


# -- commands -----------------------------------------------------------------

def cmd_omega(path) -> CommandResult:
    S = _load(path)
    w = omega(S)
    rep = check_conjecture_instance(S)
    data = {"omega": q(w), "dimension": S.dimension, "f_vector": S.f_vector()}
    lines = [f"omega = {q(w)}"]
    if rep.satisfied is not None:
        data["conjecture_sign"] = rep.predicted_sign
        data["conjecture_satisfied"] = rep.satisfied
        lines.append(f"sign check for odd sphere of dimension {rep.dimension}: "
                     f"{'satisfied' if rep.satisfied else 'VIOLATED'}")
    return CommandResult(OK if rep.satisfied is not False else FAILED, (data, lines))


def cmd_classify(path) -> CommandResult:
    S = _load(path)
    census = Counter((len(s) - 1, S.types[s].name) for s in S.simplices if s)
    rows = [{"dimension": d, "type": t, "count": c} for (d, t), c in sorted(census.items())]
    lines = [f"{r['dimension']}-simplices of type {r['type']}: {r['count']}" for r in rows]
    return CommandResult(OK, ({"census": rows}, lines))


def cmd_homology(path) -> CommandResult:
    prof = homology(_load(path))
    groups = {str(k): str(prof.group(k)) for k in range(-1, prof.top_degree + 1)}
    lines = [f"H~{k} = {g}" for k, g in groups.items()]
    return CommandResult(OK, ({"reduced_homology": groups}, lines))


def cmd_ghs(path, n: int) -> CommandResult:
    S = _load(path)
    if n < -1:
        raise InputError("n must be >= -1")
    res = is_ghs(S, n)
    data = {"n": n, "ghs": res.ok}
    lines = [f"GHS^{n}: {'yes' if res.ok else 'no'}"]
    if not res.ok:
        f = res.failure
        data["certificate"] = {"simplex": list(f.simplex), "expected_dim": f.expected_dim,
                               "degree": f.degree}
        lines.append(f"certificate: {f}")
    return CommandResult(OK if res.ok else FAILED, (data, lines))


def _step_lines(i, step) -> list:
    d = step.as_dict()
    agreed = {None: "no formula", True: "agreed", False: "MISMATCH"}[step.agreed]
    return [
        f"step {i}: edge {d['edge'][0]},{d['edge'][1]} weight {d['old_weight']} -> "
        f"{d['new_weight']} ({d['lemma'] or 'no rule'})",
        f"  omega {d['omega_before']} -> {d['omega_after']}",
        f"  delta direct = {d['delta_direct']}, delta formula = {d['delta_formula']} [{agreed}]",
        f"  omega(Lk e) = {d['omega_link_edge']}; signs (Lk e, delta) = "
        f"({d['sign_omega_link_edge']:+d}, {d['sign_delta']:+d})",
    ]


def cmd_reduce(path, edge, new_weight: int, output=None) -> CommandResult:
    S = _load(path)
    try:
        step, new = reduce_edge(S, edge, new_weight)
    except (NotAnEdge, PreconditionViolated) as exc:
        raise InputError(str(exc)) from None
    if output:
        write_complex(output, new.graph)
    data = {"steps": [step.as_dict()]}
    return CommandResult(FAILED if step.agreed is False else OK, (data, _step_lines(1, step)))


def cmd_pipeline(path, output=None) -> CommandResult:
    S = _load(path)
    res = reduce_pipeline(S)
    if output:
        write_complex(output, res.final.graph)
    lines = [f"{len(res.steps)} steps"]
    for i, step in enumerate(res.steps, 1):
        lines += _step_lines(i, step)
    w0, w1 = omega(res.initial), omega(res.final)
    lines.append(f"total delta = {q(res.total_delta)}; omega final - initial = {q(w1 - w0)}")
    data = {"steps": [s.as_dict() for s in res.steps], "omega_initial": q(w0),
            "omega_final": q(w1), "total_delta": q(res.total_delta)}
    ok = res.all_agreed and res.total_delta == w1 - w0
    return CommandResult(OK if ok else FAILED, (data, lines))


def cmd_verify(max_n: int = 12, series_order: int = 24) -> CommandResult:
    from .verify import run_verification

    if max_n < 4 or series_order < 4:
        raise InputError("--max-n and --series-order must be >= 4")
    rows = run_verification(max_n, series_order)
    lines = []
    for r in rows:
        lines.append(f"{'PASS' if r.ok else 'FAIL'}  {r.label}")
        if r.detail and not r.ok:
            lines.append(f"      {r.detail}")
    failed = sum(not r.ok for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} checks passed")
    data = {"checks": [{"label": r.label, "ok": r.ok, "detail": r.detail} for r in rows]}
    return CommandResult(FAILED if failed else OK, (data, lines))


# -- argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format (default: text)")
    # repeated on each subcommand; SUPPRESS keeps it from clobbering the top-level value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output format (default: text)")
    p = argparse.ArgumentParser(prog="coxflag", parents=[top],
                                description="Exact omega, Coxeter types and weight reduction "
                                            "for edge-weighted flag complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, helptext in (("omega", "print omega(S) as an exact fraction"),
                           ("classify", "census of simplex Coxeter types"),
                           ("homology", "reduced integral homology")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("file")

    sp = sub.add_parser("ghs", parents=[common], help="generalized homology sphere test")
    sp.add_argument("file")
    sp.add_argument("n", type=int)

    sp = sub.add_parser("reduce", parents=[common], help="lower the weight of one edge")
    sp.add_argument("file")
    sp.add_argument("--edge", required=True, help="edge as 'a,b' with vertex ids from the file")
    sp.add_argument("--to", dest="new_weight", type=int, required=True)
    sp.add_argument("-o", "--output", help="write the reduced complex here")

    sp = sub.add_parser("pipeline", parents=[common], help="reduce to the right-angled complex")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", help="write the final complex here")

    sp = sub.add_parser("verify", parents=[common], help="run the identity and constant checks")
    sp.add_argument("--max-n", type=int, default=12)
    sp.add_argument("--series-order", type=int, default=24)
    return p


def run(args) -> CommandResult:
    c = args.command
    if c == "omega":
        return cmd_omega(args.file)
    if c == "classify":
        return cmd_classify(args.file)
    if c == "homology":
        return cmd_homology(args.file)
    if c == "ghs":
        return cmd_ghs(args.file, args.n)
    if c == "reduce":
        return cmd_reduce(args.file, _parse_edge(args.edge), args.new_weight, args.output)
    if c == "pipeline":
        return cmd_pipeline(args.file, args.output)
    return cmd_verify(args.max_n, args.series_order)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        result = run(args)
    except InputError as exc:
        print(f"coxflag: error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    data, lines = result.report
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
