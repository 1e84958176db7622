"""Command-line front end.

Subcommands: tensor, ubasis, cousins, matrix, trick, rank, verify,
relations.  Text output is pipe-friendly ASCII ('V12 - V8 + V2'); json is
the canonical machine format and is byte-deterministic for fixed inputs.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core_ring, digits, ideals, oracle, quantum, ubasis

_JSON_SEP = (",", ":")


def _emit(payload: bytes | str, out: str | None) -> None:
    data = payload.encode() if isinstance(payload, str) else payload
    if out:
        with open(out, "wb") as handle:
            handle.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _dump(obj) -> str:
    return json.dumps(obj, separators=_JSON_SEP) + "\n"


def _group(args) -> core_ring.GroupSpec:
    return core_ring.GroupSpec(args.p, args.alpha)


def cmd_tensor(args) -> int:
    element = core_ring.tensor(_group(args), args.r, args.s)
    if args.format == "json":
        _emit(_dump(element.to_json_dict()), args.out)
    else:
        _emit(str(element) + "\n", args.out)
    return 0


def cmd_ubasis(args) -> int:
    element = ubasis.u_element(_group(args), args.r)
    if args.format == "json":
        _emit(_dump(element.to_json_dict()), args.out)
    else:
        _emit(str(element) + "\n", args.out)
    return 0


def cmd_cousins(args) -> int:
    values = sorted(ubasis.cousins(args.n, args.base))
    if args.format == "json":
        _emit(_dump({"n": args.n, "base": args.base, "cousins": values}), args.out)
    else:
        _emit(" ".join(str(v) for v in values) + "\n", args.out)
    return 0


def cmd_matrix(args) -> int:
    direction = args.direction.replace("-", "_")
    matrix = ubasis.change_of_basis(_group(args), direction)
    _emit(ubasis.render_matrix(matrix, args.format), args.out)
    return 0


def _trick_text(cert: digits.TrickCertificate) -> str:
    parts = []
    for _, digs, product in sorted(cert.terms, reverse=True):
        if len(digs) > 1:
            parts.append("".join(f"({d + 1})" for d in reversed(digs)))
        else:
            parts.append(str(product))
    return f"{cert.n} = " + " + ".join(parts) + "\n"


def cmd_trick(args) -> int:
    cert = digits.trick_certificate(args.n, args.base)
    if args.format == "json":
        _emit(_dump(cert.to_json_dict()), args.out)
    else:
        _emit(_trick_text(cert), args.out)
    return 0


def cmd_rank(args) -> int:
    report = ideals.rank_report(ideals.CyclicGroupSpec(args.n, args.p))
    if args.format == "json":
        _emit(_dump(report), args.out)
    else:
        _emit(
            f"quotient_rank {report['quotient_rank']}, phi {report['phi_n']}\n",
            args.out,
        )
    return 0


def cmd_verify(args) -> int:
    mismatches = oracle.verify_engine(args.p, args.alpha, budget=args.budget)
    if args.format == "json":
        _emit(_dump(mismatches), args.out)
    else:
        _emit(f"{len(mismatches)} mismatches\n", args.out)
    return 1 if mismatches else 0


def cmd_relations(args) -> int:
    group = _group(args)
    names = ["F0"] + [f"F{j}" for j in range(1, args.alpha)]
    values = [quantum.relation_F0(group)] + [
        quantum.relation_F(group, j) for j in range(1, args.alpha)
    ]
    vanishes = {name: value.is_zero() for name, value in zip(names, values)}
    ok = all(vanishes.values())
    if args.format == "json":
        payload = {
            "p": args.p,
            "alpha": args.alpha,
            "vanishes": vanishes,
            "all_vanish": ok,
        }
        _emit(_dump(payload), args.out)
    elif ok:
        _emit(" ".join(names) + " all vanish\n", args.out)
    else:
        failed = [name for name, good in vanishes.items() if not good]
        _emit("nonzero: " + " ".join(failed) + "\n", args.out)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenring",
        description="Exact computations in the representation ring of "
        "cyclic groups in characteristic p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *, group=False, base=False, fmt=("text", "json"), default_fmt="text"):
        if group:
            sp.add_argument("--p", type=int, required=True, help="prime characteristic")
            sp.add_argument("--alpha", type=int, required=True, help="exponent of p")
        if base:
            sp.add_argument("--base", type=int, default=10, help="digit base (default 10)")
        sp.add_argument("--format", choices=fmt, default=default_fmt)
        sp.add_argument("--out", help="write output to this file instead of stdout")

    sp = sub.add_parser("tensor", help="decompose V_r (x) V_s")
    sp.add_argument("r", type=int)
    sp.add_argument("s", type=int)
    common(sp, group=True)
    sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("ubasis", help="expand U_r in the V-basis")
    sp.add_argument("r", type=int)
    common(sp, group=True)
    sp.set_defaults(func=cmd_ubasis)

    sp = sub.add_parser("cousins", help="sign flips of the non-leading digits")
    sp.add_argument("n", type=int)
    common(sp, base=True)
    sp.set_defaults(func=cmd_cousins)

    sp = sub.add_parser("matrix", help="change-of-basis matrix")
    sp.add_argument(
        "--direction",
        choices=["v-to-u", "u-to-v"],
        default="v-to-u",
    )
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--format", choices=["text", "csv", "pbm"], default="csv")
    sp.add_argument("--out", help="write output to this file instead of stdout")
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("trick", help="pick-a-number digit certificate")
    sp.add_argument("n", type=int)
    common(sp, base=True)
    sp.set_defaults(func=cmd_trick)

    sp = sub.add_parser("rank", help="rank of the non-induced quotient vs phi(n)")
    sp.add_argument("n", type=int)
    sp.add_argument("--p", type=int, required=True, help="prime characteristic")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--out", help="write output to this file instead of stdout")
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("verify", help="engine vs oracle sweep")
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    common(sp, group=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("relations", help="check that the presentation relations vanish")
    common(sp, group=True)
    sp.set_defaults(func=cmd_relations)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
