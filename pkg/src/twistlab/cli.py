"""Command-line front end: one subcommand per library entry point.

Machine-readable results go to stdout, pictures and per-fixture progress go
to stderr, so output can be piped or written with ``--out``.  Exit codes:
0 success, 1 domain or computation error, 2 a scan surfaced a
counterexample, 64 bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources
from typing import Any, Dict, Optional, Sequence, Tuple

from .abacus import is_p_by_p, p_core, to_abacus
from .criteria import (
    h0_failed_row,
    ks_ext1_witness,
    murphy_end_dim,
    murphy_indecomposable,
    murphy_summand_count,
)
from .errors import TwistlabError
from .mullineux import mullineux_map, mullineux_symbol, tau, verify_hat_identity
from .partitions import Partition
from .search import (
    SearchReport,
    census,
    check_twist_persistence,
    find_p_image,
    find_twist_commuting,
    ks_stability_scan,
    multi_twist_scan,
)
from .specht import (
    build_specht,
    end_ring,
    hom_dim,
    invariants_dim,
    is_decomposable,
)

USAGE_ERROR = 64

Payload = Tuple[Any, int]


class _Parser(argparse.ArgumentParser):
    """argparse with the conventional 64 for command-line mistakes."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _partition(text: str) -> Partition:
    """Parse '15,15' into a Partition; reject anything not largest-first."""
    if text.strip() == "":
        return Partition()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers")
    if any(x <= 0 for x in parts):
        raise argparse.ArgumentTypeError("every part must be a positive integer")
    if any(x < y for x, y in zip(parts, parts[1:])):
        raise argparse.ArgumentTypeError("parts must be listed largest first")
    return Partition(parts)


def _parts(lam: Partition) -> list:
    return list(lam.parts)


# ---------------------------------------------------------------- handlers


def _cmd_mull(args: argparse.Namespace) -> Payload:
    image = mullineux_map(args.lam, args.p)
    payload: Dict[str, Any] = {
        "p": args.p,
        "input": _parts(args.lam),
        "mullineux": _parts(image),
    }
    if args.show_symbol:
        sym = mullineux_symbol(args.lam, args.p)
        payload["symbol"] = {
            "a": [a for a, _ in sym.columns],
            "r": [r for _, r in sym.columns],
        }
    return payload, 0


def _cmd_tau(args: argparse.Namespace) -> Payload:
    return _parts(tau(args.n, args.p)), 0


def _cmd_hat(args: argparse.Namespace) -> Payload:
    hatted = args.lam.hat(args.p)
    payload = {
        "p": args.p,
        "lambda": _parts(args.lam),
        "hat": _parts(hatted),
        "mullineux_of_hat": _parts(mullineux_map(hatted, args.p)),
        "expected": _parts(args.lam.scale(args.p - 1)),
        "holds": verify_hat_identity(args.lam, args.p),
    }
    return payload, 0


def _cmd_symbol(args: argparse.Namespace) -> Payload:
    sym = mullineux_symbol(args.lam, args.p)
    payload = {
        "p": args.p,
        "lambda": _parts(args.lam),
        "a": [a for a, _ in sym.columns],
        "r": [r for _, r in sym.columns],
    }
    return payload, 0


def _cmd_abacus(args: argparse.Namespace) -> Payload:
    display = to_abacus(args.lam, args.p, args.beads)
    block = p_core(args.lam, args.p, args.beads)
    for row in display.picture():
        print(row, file=sys.stderr)
    payload = {
        "p": args.p,
        "lambda": _parts(args.lam),
        "beta": list(display.beta),
        "core": _parts(block.core),
        "weight": block.weight,
        "p_by_p": is_p_by_p(args.lam, args.p),
    }
    return payload, 0


def _cmd_ks_ext(args: argparse.Namespace) -> Payload:
    witness = ks_ext1_witness(args.p, args.lam, args.mu)
    payload = {
        "inputs": {"p": args.p, "lam": _parts(args.lam), "mu": _parts(args.mu)},
        "result": 0 if witness is None else 1,
        "certificate": witness,
    }
    return payload, 0


def _cmd_murphy(args: argparse.Namespace) -> Payload:
    payload = {
        "inputs": {"d": args.d, "r": args.r},
        "result": {
            "end_dim": murphy_end_dim(args.d, args.r),
            "indecomposable": murphy_indecomposable(args.d, args.r),
        },
        "certificate": {"summands": murphy_summand_count(args.d, args.r)},
    }
    return payload, 0


def _cmd_h0(args: argparse.Namespace) -> Payload:
    row = h0_failed_row(args.lam, args.p)
    payload = {
        "inputs": {"p": args.p, "lambda": _parts(args.lam)},
        "result": row is None,
        "certificate": row,
    }
    return payload, 0


def _cmd_specht_hom(args: argparse.Namespace) -> Payload:
    a = build_specht(args.lam, args.p)
    b = build_specht(args.mu, args.p)
    payload = {
        "dims": [a.dim, b.dim],
        "result": hom_dim(a, b),
        "method": "enumerated",
    }
    return payload, 0


def _cmd_specht_decomposable(args: argparse.Namespace) -> Payload:
    module = build_specht(args.lam, args.p)
    basis = end_ring(module)
    method = "enumerated" if args.p ** len(basis) <= 2**20 else "fitting"
    payload = {
        "dims": [module.dim],
        "result": is_decomposable(module, seed=args.seed),
        "method": method,
    }
    return payload, 0


def _cmd_specht_h0(args: argparse.Namespace) -> Payload:
    module = build_specht(args.lam, args.p)
    payload = {
        "dims": [module.dim],
        "result": invariants_dim(module),
        "method": "enumerated",
    }
    return payload, 0


def _cmd_search(args: argparse.Namespace) -> Payload:
    if args.which == "fixed-points":
        report = find_twist_commuting(args.d, args.p, jobs=args.jobs)
    elif args.which == "persistence":
        report = check_twist_persistence(args.d, args.p, jobs=args.jobs)
    elif args.which == "p-image":
        report = find_p_image(args.d, args.p, jobs=args.jobs)
    elif args.which == "multi-twist":
        report = multi_twist_scan(args.lam, args.p, args.max_b)
    elif args.which == "ks-stability":
        report = ks_stability_scan(args.d, args.p, jobs=args.jobs)
    else:
        report = census(args.d, args.p)
    return report, 2 if report.counterexamples else 0


# ---------------------------------------------------------------- fixtures


def _eval_fixture(fx: Dict[str, Any]) -> Any:
    kind = fx["kind"]
    inputs = fx["inputs"]
    if kind == "mull":
        image = mullineux_map(Partition(inputs["lambda"]), inputs["p"])
        if inputs.get("conjugate"):
            image = image.conjugate()
        return _parts(image)
    if kind == "tau":
        return _parts(tau(inputs["n"], inputs["p"]))
    if kind == "ks":
        lam, mu = Partition(inputs["lam"]), Partition(inputs["mu"])
        return 0 if ks_ext1_witness(inputs["p"], lam, mu) is None else 1
    if kind == "murphy":
        d, r = inputs["d"], inputs["r"]
        return {
            "end_dim": murphy_end_dim(d, r),
            "indecomposable": murphy_indecomposable(d, r),
        }
    if kind == "h0":
        return h0_failed_row(Partition(inputs["lambda"]), inputs["p"]) is None
    if kind == "specht":
        p = inputs["p"]
        lam = Partition(inputs["lambda"])
        module = build_specht(lam, p)
        out: Dict[str, Any] = {}
        if "mu" in inputs:
            out["hom_dim"] = hom_dim(module, build_specht(Partition(inputs["mu"]), p))
        if "decomposable" in fx["expected"]:
            out["decomposable"] = is_decomposable(module)
        if "invariants" in fx["expected"]:
            out["invariants"] = invariants_dim(module)
        if "end_dim" in fx["expected"]:
            out["end_dim"] = len(end_ring(module))
        return out
    if kind == "search":
        which = inputs["search"]
        if which == "fixed-points":
            report = find_twist_commuting(inputs["d"], inputs["p"])
        elif which == "multi-twist":
            report = multi_twist_scan(Partition(inputs["lambda"]), inputs["p"], inputs["max_b"])
        elif which == "ks-stability":
            report = ks_stability_scan(inputs["d"], inputs["p"])
        elif which == "persistence":
            report = check_twist_persistence(inputs["d"], inputs["p"])
        else:
            raise ValueError(f"fixture references unknown search {which!r}")
        out = {"hit_count": len(report.hits), "counterexamples": len(report.counterexamples)}
        if "pairs" in fx["expected"]:
            out["pairs"] = sorted([h["a"], h["b"]] for h in report.hits)
        if "hit_lambdas" in fx["expected"]:
            out["hit_lambdas"] = [h["lambda"] for h in report.hits]
        return {key: out[key] for key in fx["expected"]}
    raise ValueError(f"unknown fixture kind {kind!r}")


def _cmd_verify(args: argparse.Namespace) -> Payload:
    if args.file is not None:
        try:
            text = open(args.file, encoding="utf-8").read()
        except OSError as exc:
            raise TwistlabError(str(exc))
    else:
        text = resources.files("twistlab").joinpath("data/fixtures.json").read_text("utf-8")
    if text.strip() == "":
        fixtures = []
    else:
        try:
            fixtures = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TwistlabError(f"fixtures parse error at line {exc.lineno}: {exc.msg}")
    seen = set()
    failures = []
    for fx in fixtures:
        if fx["id"] in seen:
            raise TwistlabError(f"duplicate fixture id {fx['id']!r}")
        seen.add(fx["id"])
        got = _eval_fixture(fx)
        if got == fx["expected"]:
            print(f"ok   {fx['id']}", file=sys.stderr)
        else:
            failures.append(fx["id"])
            print(f"FAIL {fx['id']}: expected {fx['expected']!r}, got {got!r}", file=sys.stderr)
    payload = {
        "checked": len(fixtures),
        "passed": len(fixtures) - len(failures),
        "failed": failures,
    }
    return payload, 1 if failures else 0


# ---------------------------------------------------------------- rendering


def _flatten(value: Any) -> str:
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    return "" if value is None else str(value)


def _render_csv(payload: Any) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(payload, SearchReport):
        rows = [("hit", h) for h in payload.hits]
        rows += [("counterexample", c) for c in payload.counterexamples]
        columns: list = []
        for _, record in rows:
            for key in record:
                if key not in columns:
                    columns.append(key)
        writer.writerow(["kind"] + columns)
        for role, record in rows:
            writer.writerow([role] + [_flatten(record.get(col)) for col in columns])
        return buf.getvalue()
    if not isinstance(payload, dict):
        payload = {"value": payload}
    writer.writerow(list(payload))
    writer.writerow([_flatten(v) for v in payload.values()])
    return buf.getvalue()


def _render_table(payload: Any) -> str:
    if isinstance(payload, SearchReport):
        lines = [
            f"search          {payload.search}",
            f"parameters      {_flatten(payload.parameters)}",
            f"scanned         {payload.scanned}",
            f"hits            {len(payload.hits)}",
            f"counterexamples {len(payload.counterexamples)}",
        ]
        lines += [f"  hit {i}: {_flatten(h)}" for i, h in enumerate(payload.hits, 1)]
        lines += [f"  cex {i}: {_flatten(c)}" for i, c in enumerate(payload.counterexamples, 1)]
        return "\n".join(lines) + "\n"
    if not isinstance(payload, dict):
        payload = {"value": payload}
    width = max((len(k) for k in payload), default=0)
    return "".join(f"{k.ljust(width)}  {_flatten(v)}\n" for k, v in payload.items())


def _emit(payload: Any, args: argparse.Namespace) -> None:
    fmt = getattr(args, "format", "json")
    if fmt == "csv":
        text = _render_csv(payload)
    elif fmt == "table":
        text = _render_table(payload)
    else:
        body = payload.to_dict() if isinstance(payload, SearchReport) else payload
        text = json.dumps(body, indent=2) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- parser


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "csv", "table"), default="json")
    sub.add_argument("--out", metavar="FILE", default=None)


def _add_lambda(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--lambda", dest="lam", type=_partition, required=True, metavar="PARTS")


def _build_parser() -> _Parser:
    parser = _Parser(prog="twistlab", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    mull = commands.add_parser("mull", help="apply the regular-label involution")
    mull.add_argument("--p", type=int, required=True)
    _add_lambda(mull)
    mull.add_argument("--show-symbol", action="store_true")
    _add_common(mull)
    mull.set_defaults(handler=_cmd_mull)

    tau_cmd = commands.add_parser("tau", help="label of the trivial module")
    tau_cmd.add_argument("--p", type=int, required=True)
    tau_cmd.add_argument("--n", type=int, required=True)
    _add_common(tau_cmd)
    tau_cmd.set_defaults(handler=_cmd_tau)

    hat = commands.add_parser("hat", help="check m(hat) = (p-1)*lambda for distinct parts")
    hat.add_argument("--p", type=int, required=True)
    _add_lambda(hat)
    _add_common(hat)
    hat.set_defaults(handler=_cmd_hat)

    symbol = commands.add_parser("symbol", help="rim-removal symbol columns")
    symbol.add_argument("--p", type=int, required=True)
    _add_lambda(symbol)
    _add_common(symbol)
    symbol.set_defaults(handler=_cmd_symbol)

    abacus = commands.add_parser("abacus", help="bead display, core, and weight")
    abacus.add_argument("--p", type=int, required=True)
    _add_lambda(abacus)
    abacus.add_argument("--beads", type=int, default=None)
    _add_common(abacus)
    abacus.set_defaults(handler=_cmd_abacus)

    ks = commands.add_parser("ks-ext", help="two-row Ext criterion with digit witness")
    ks.add_argument("--p", type=int, required=True)
    ks.add_argument("--lam", type=_partition, required=True, metavar="PARTS")
    ks.add_argument("--mu", type=_partition, required=True, metavar="PARTS")
    _add_common(ks)
    ks.set_defaults(handler=_cmd_ks_ext)

    murphy = commands.add_parser("murphy", help="hook endomorphisms and summands at p=2")
    murphy.add_argument("--d", type=int, required=True)
    murphy.add_argument("--r", type=int, required=True)
    _add_common(murphy)
    murphy.set_defaults(handler=_cmd_murphy)

    h0 = commands.add_parser("h0", help="fixed-point congruence test")
    h0.add_argument("--p", type=int, required=True)
    _add_lambda(h0)
    _add_common(h0)
    h0.set_defaults(handler=_cmd_h0)

    specht = commands.add_parser("specht", help="linear-algebra oracles")
    specht_sub = specht.add_subparsers(dest="specht_command", required=True, metavar="WHAT")

    hom = specht_sub.add_parser("hom", help="dimension of the hom space")
    hom.add_argument("--p", type=int, required=True)
    hom.add_argument("--lam", type=_partition, required=True, metavar="PARTS")
    hom.add_argument("--mu", type=_partition, required=True, metavar="PARTS")
    _add_common(hom)
    hom.set_defaults(handler=_cmd_specht_hom)

    dec = specht_sub.add_parser("decomposable", help="search for a splitting idempotent")
    dec.add_argument("--p", type=int, required=True)
    _add_lambda(dec)
    dec.add_argument("--seed", type=int, default=0)
    _add_common(dec)
    dec.set_defaults(handler=_cmd_specht_decomposable)

    sh0 = specht_sub.add_parser("h0", help="dimension of the fixed-point space")
    sh0.add_argument("--p", type=int, required=True)
    _add_lambda(sh0)
    _add_common(sh0)
    sh0.set_defaults(handler=_cmd_specht_h0)

    search = commands.add_parser("search", help="exhaustive scans with audited reports")
    search_sub = search.add_subparsers(dest="which", required=True, metavar="SCAN")
    for name, needs in (
        ("fixed-points", "dp"),
        ("persistence", "dp"),
        ("p-image", "dp"),
        ("multi-twist", "lp"),
        ("ks-stability", "dp"),
        ("census", "d"),
    ):
        scan = search_sub.add_parser(name)
        scan.add_argument("--p", type=int, required=True)
        if "d" in needs:
            scan.add_argument("--d", type=int, required=True)
        if "l" in needs:
            _add_lambda(scan)
            scan.add_argument("--max-b", dest="max_b", type=int, required=True)
        if needs == "dp" and name != "census":
            scan.add_argument("--jobs", type=int, default=1)
        _add_common(scan)
        scan.set_defaults(handler=_cmd_search, which=name)

    verify = commands.add_parser("verify", help="re-run the packaged fixture set")
    verify.add_argument("file", nargs="?", default=None)
    _add_common(verify)
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload, code = args.handler(args)
    except TwistlabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
