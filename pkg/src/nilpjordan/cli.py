"""Command-line front end.

    nilpjordan analyze FILE     order, class, series, generators, abelian index
    nilpjordan reduce FILE      the semilinear reduction report
    nilpjordan cd FILE          the Chermak-Delgado subgroup and its bound
    nilpjordan witness NAME     write a named group as a group-definition file

Exit codes: 0 success, 2 precondition violation, 3 cap exceeded,
4 parse/validation error, 5 certification failure.
"""

import argparse
import json
import os
import sys
from datetime import datetime, timezone

from . import __version__
from .errors import NilpJordanError, ValidationError
from .group_core import (
    DEFAULT_CLOSURE_CAPS,
    all_subgroups,
    center,
    closure,
    index,
    min_generating_set,
)
from .groupfile import format_group, parse_group_file
from .jordan import Transcript, best_abelian_index, chermak_delgado, semilinear_reduce
from .structure import (
    derived_subgroup,
    is_class_at_most_two,
    lower_central_series,
    nilpotency_class,
    upper_central_series,
)
from . import witnesses

EXIT_OK = 0


def _input_info(G, ctx):
    info = {"kind": G.kind, "order": G.order}
    if G.kind == "permutation":
        info["degree"] = G.dimension
    else:
        info["conductor"] = G.conductor
        info["n"] = G.dimension
    if ctx.name:
        info["name"] = ctx.name
    if ctx.source:
        info["file"] = os.path.basename(ctx.source)
    return info


def _load(args):
    gens, ctx = parse_group_file(args.file)
    cap = args.closure_cap or DEFAULT_CLOSURE_CAPS[ctx.kind]
    G = closure(gens, cap=cap, name=ctx.name)
    return G, ctx


def cmd_analyze(args):
    G, ctx = _load(args)
    cls = nilpotency_class(G)
    out = {"command": "analyze", "input": _input_info(G, ctx)}
    out["abelian"] = G.is_abelian()
    out["class"] = "NotNilpotent" if cls is None else cls
    out["class_at_most_two"] = is_class_at_most_two(G)
    out["upper_central_series"] = upper_central_series(G).orders
    out["lower_central_series"] = lower_central_series(G).orders
    out["center_order"] = center(G).order
    out["derived_order"] = derived_subgroup(G).order
    out["exponent"] = G.exponent
    out["min_generators"] = len(min_generating_set(G))
    if G.order <= args.lattice_cap:
        lattice = all_subgroups(G, args.lattice_cap)
        out["subgroup_count"] = len(lattice)
        out["best_abelian_index"] = best_abelian_index(G, lattice=lattice)
    else:
        out["subgroup_count"] = None
        out["best_abelian_index"] = None
        out["note"] = f"|G| exceeds the lattice cap {args.lattice_cap}"
    return out


def cmd_reduce(args):
    G, ctx = _load(args)
    report = semilinear_reduce(G, lattice_cap=args.lattice_cap, aut_cap=args.aut_cap)
    data = report.to_dict()
    data["input"] = {**_input_info(G, ctx), **data["input"]}
    return {"command": "reduce", **data}


def cmd_cd(args):
    G, ctx = _load(args)
    log = Transcript()
    lattice = all_subgroups(G, args.lattice_cap)
    M = chermak_delgado(
        G, lattice_cap=args.lattice_cap, aut_cap=args.aut_cap, transcript=log, lattice=lattice
    )
    least = best_abelian_index(G, lattice=lattice)
    return {
        "command": "cd",
        "input": _input_info(G, ctx),
        "subgroup": {
            "order": M.order,
            "index": index(G, M),
            "abelian": M.is_abelian(),
            "equals_center": M == center(G),
        },
        "bound": {
            "least_abelian_index": least,
            "index_squared": least**2,
            "holds": index(G, M) <= least**2,
        },
        "transcript": [{"claim": c.claim, "method": c.method, "result": c.result} for c in log],
    }


def _build_witness(args):
    name = args.name
    if name == "heisenberg":
        return witnesses.heisenberg_monomial(_need(args.p, "--p"), cap=args.p_cap)
    if name in ("cyclic", "dihedral", "symmetric"):
        return getattr(witnesses, name)(_need(args.n, "--n"))
    if name == "quaternion8":
        return witnesses.quaternion8()
    if name == "bad_gamma":
        return witnesses.bad_gamma_sample()
    if name in witnesses.SEMILINEAR_SAMPLES:
        return witnesses.SEMILINEAR_SAMPLES[name]()
    raise ValidationError(f"unknown witness {name!r}; choose from {', '.join(WITNESS_NAMES)}")


def _need(value, flag):
    if value is None:
        raise ValidationError(f"this witness needs {flag}")
    return value


WITNESS_NAMES = (
    "heisenberg",
    "cyclic",
    "dihedral",
    "symmetric",
    "quaternion8",
    "bad_gamma",
    *witnesses.SEMILINEAR_SAMPLES,
)


def cmd_witness(args):
    G = _build_witness(args)
    text = format_group(G)
    out = {"command": "witness", "name": G.name, "kind": G.kind, "order": G.order}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out["file"] = os.path.basename(args.output)
        return out
    return text


COMMANDS = {
    "analyze": cmd_analyze,
    "reduce": cmd_reduce,
    "cd": cmd_cd,
    "witness": cmd_witness,
}


def _text(value, indent=0):
    pad = "  " * indent
    lines = []
    for key, v in value.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{key}:")
            lines += _text(v, indent + 1)
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{key}:")
            for item in v:
                lines.append(f"{pad}  - " + "; ".join(f"{k}: {x}" for k, x in item.items()))
        elif isinstance(v, bool):
            lines.append(f"{pad}{key}: {'yes' if v else 'no'}")
        else:
            lines.append(f"{pad}{key}: {v}")
    return lines


def render(result, fmt):
    if isinstance(result, str):
        return result
    if fmt == "text":
        return "\n".join(_text(result)) + "\n"
    return json.dumps(result, indent=2) + "\n"


_HELP = {
    "analyze": "order, class, central series, generators, abelian index",
    "reduce": "certified semilinear reduction to a class-two subgroup",
    "cd": "the Chermak-Delgado subgroup and its index bound",
}


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 4), not precondition failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(4, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(
        prog="nilpjordan",
        description="Exact finite group analysis and the semilinear class-two reduction.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--closure-cap", type=int, default=None,
                        help="maximum group order during closure (default: per element kind)")
    common.add_argument("--lattice-cap", type=int, default=2000,
                        help="maximum order for full subgroup lattices (default: 2000)")
    common.add_argument("--aut-cap", type=int, default=256,
                        help="maximum order for automorphism enumeration (default: 256)")
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit the timestamp so reports are byte-reproducible")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json",
                     help="JSON output (default)")
    fmt.add_argument("--text", dest="format", action="store_const", const="text",
                     help="human-readable output")
    common.set_defaults(format="json")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, text in _HELP.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file", help="group-definition file")
    p = sub.add_parser("witness", parents=[common], help="write a named group")
    p.add_argument("name", help=", ".join(WITNESS_NAMES))
    p.add_argument("--p", type=int, help="prime for heisenberg")
    p.add_argument("--n", type=int, help="parameter for cyclic, dihedral, symmetric")
    p.add_argument("--p-cap", type=int, default=7, help="largest allowed heisenberg prime")
    p.add_argument("-o", "--output", help="write the file here instead of stdout")
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except NilpJordanError as err:
        stderr.write(f"error ({type(err).__name__}): {err}\n")
        return err.exit_code
    if isinstance(result, dict) and not args.no_timestamp:
        result["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    stdout.write(render(result, args.format))
    return EXIT_OK


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
