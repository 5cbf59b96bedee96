"""Command line front end: single multiplicities, full tables, the
verification suite, and cache management."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .characters import kronecker
from .coeffs import PolyQU, poly_to_json, poly_to_str
from .multiplicities import (
    MasterContext,
    T_poly,
    U_poly,
    Uprime_poly,
    V_poly,
    Vprime_poly,
    build_context,
    cache_path,
    clear_cache,
    save_cache,
    verify_suite,
)
from .partitions import (
    ParseError,
    enumerate_partitions,
    parse_multipartition,
    partition_to_text,
    size,
)
from .types import parse_multitype, type_size, type_to_text

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3

WHICH_CHOICES = ("V", "Vprime", "U", "Uprime", "T", "kron")
HEADER_SYMBOL = {
    "V": "V",
    "Vprime": "V'",
    "U": "U",
    "Uprime": "U'",
    "T": "\\mathcal{T}",
    "kron": "g",
}


@dataclass
class Request:
    command: str
    k: int | None = None
    n: int | None = None
    which: str | None = None
    mu: str | None = None
    type_literal: str | None = None
    fmt: str = "text"
    cache_dir: str | None = None
    jobs: int = 1
    action: str | None = None


class UsageError(Exception):
    pass


def default_cache_dir() -> str:
    base = os.environ.get("XDG_CACHE_HOME")
    if not base:
        base = os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "ennola")


def _partition_comma(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")" if p else "(0)"


def _poly_tex(p: PolyQU) -> str:
    return poly_to_str(p).replace("*", "")


def _warn_ignored(ctx: MasterContext) -> None:
    for path in ctx.ignored_cache_files:
        print(f"warning: ignoring incompatible cache file {path}; recomputing",
              file=sys.stderr)
    ctx.ignored_cache_files.clear()


def _pair_value(ctx: MasterContext | None, which: str, mu, mt) -> PolyQU:
    if which == "V":
        return V_poly(ctx, mt if mt is not None else mu)
    if which == "Vprime":
        return Vprime_poly(ctx, mt if mt is not None else mu)
    if which == "U":
        return U_poly(ctx, mu)
    if which == "Uprime":
        return Uprime_poly(ctx, mu)
    if which == "T":
        return T_poly(ctx, mu)
    return PolyQU.const(kronecker(mu))


def cmd_pair(req: Request) -> int:
    if req.which is None:
        raise UsageError("--which is required")
    mu = mt = None
    if req.type_literal is not None:
        if req.which not in ("V", "Vprime"):
            raise UsageError("--type is only valid with --which V or Vprime")
        mt = parse_multitype(req.type_literal)
        k, n = len(mt), type_size(mt[0])
        labels = [type_to_text(c) for c in mt]
    elif req.mu is not None:
        mu = parse_multipartition(req.mu)
        k, n = len(mu), size(mu[0])
        labels = [partition_to_text(c) for c in mu]
    else:
        raise UsageError("one of --mu or --type is required")
    if req.k is not None and req.k != k:
        raise UsageError(f"--k {req.k} does not match literal with {k} components")

    ctx = None
    if req.which != "kron":
        ctx = build_context(k, n, req.cache_dir)
    val = _pair_value(ctx, req.which, mu, mt)
    if ctx is not None:
        _warn_ignored(ctx)

    if req.fmt == "text":
        print(poly_to_str(val))
    elif req.fmt == "json":
        obj = {"which": req.which, "k": k, "n": n,
               ("type" if mt is not None else "mu"): labels,
               "poly": poly_to_json(val), "text": poly_to_str(val)}
        print(json.dumps(obj, separators=(",", ":")))
    elif req.fmt == "csv":
        header = ",".join(f"mu{i + 1}" for i in range(k)) + ",polynomial"
        print(header)
        print(",".join(labels) + "," + poly_to_str(val))
    else:
        print(f"${_poly_tex(val)}$")
    return EXIT_OK


def _table_rows(ctx: MasterContext | None, which: str, k: int, n: int, jobs: int):
    parts = sorted(enumerate_partitions(n))
    keys = list(combinations_with_replacement(parts, k))

    def value(mu):
        if which == "kron":
            return PolyQU.const(kronecker(mu))
        return _pair_value(ctx, which, mu, None)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            vals = list(pool.map(value, keys))
    else:
        vals = [value(mu) for mu in keys]
    return [(mu, v) for mu, v in zip(keys, vals) if not v.is_zero()]


def format_table(rows, which: str, k: int, n: int, fmt: str) -> str:
    if fmt == "text":
        lines = []
        for mu, val in rows:
            cells = ", ".join(_partition_comma(c) for c in mu)
            lines.append(f"{cells} → {poly_to_str(val)}")
        return "\n".join(lines)
    if fmt == "csv":
        lines = [",".join(f"mu{i + 1}" for i in range(k)) + ",polynomial"]
        for mu, val in rows:
            lines.append(
                ",".join(partition_to_text(c) for c in mu) + "," + poly_to_str(val)
            )
        return "\n".join(lines)
    if fmt == "json":
        obj = {
            "which": which, "k": k, "n": n,
            "rows": [
                {"mu": [partition_to_text(c) for c in mu],
                 "poly": poly_to_json(val), "text": poly_to_str(val)}
                for mu, val in rows
            ],
        }
        return json.dumps(obj, separators=(",", ":"))
    sym = HEADER_SYMBOL[which]
    lines = ["\\begin{tabular}{" + "c" * k + "|l}"]
    lines.append(" & ".join(f"$\\mu^{i + 1}$" for i in range(k)) + f" & ${sym}$\\\\")
    lines.append("\\hline")
    for mu, val in rows:
        cells = " & ".join(f"$({partition_to_text(c)})$" for c in mu)
        lines.append(f"{cells} & ${_poly_tex(val)}$\\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def cmd_table(req: Request) -> int:
    if req.which is None:
        raise UsageError("--which is required")
    if req.n is None:
        raise UsageError("--n is required")
    k = req.k if req.k is not None else 3
    ctx = None
    if req.which != "kron":
        ctx = build_context(k, req.n, req.cache_dir)
        if req.which in ("V", "Vprime"):
            ctx.psi_schur(req.n)
        else:
            ctx.tau_schur(req.n)
        _warn_ignored(ctx)
    rows = _table_rows(ctx, req.which, k, req.n, req.jobs)
    out = format_table(rows, req.which, k, req.n, req.fmt)
    if out:
        print(out)
    return EXIT_OK


def cmd_verify(req: Request) -> int:
    if req.n is None:
        raise UsageError("--n is required")
    k = req.k if req.k is not None else 3
    ctx = build_context(k, req.n, req.cache_dir)
    report = verify_suite(ctx)
    _warn_ignored(ctx)
    if req.fmt == "json":
        print(json.dumps(report.to_json(), separators=(",", ":")))
    else:
        for line in report.summary_lines():
            print(line)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_cache(req: Request) -> int:
    cache_dir = req.cache_dir or default_cache_dir()
    if req.action == "clear":
        removed = clear_cache(cache_dir, req.k)
        print(f"removed {len(removed)} cache file(s) from {cache_dir}")
        return EXIT_OK
    if req.n is None:
        raise UsageError("--n is required for cache build")
    k = req.k if req.k is not None else 3
    ctx = build_context(k, req.n, cache_dir)
    for n in range(1, req.n + 1):
        table = ctx.psi_schur(n)
        save_cache(cache_dir, k, n, table)
        print(f"wrote {cache_path(cache_dir, k, n)} ({len(table)} entries)")
    _warn_ignored(ctx)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ennola",
        description="Multiplicity polynomials for finite general linear "
        "and unitary groups, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, jobs: bool = True) -> None:
        p.add_argument("--k", type=int, default=None,
                       help="number of tensor factors (default 3)")
        p.add_argument("--format", dest="fmt", default="text",
                       choices=("text", "json", "csv", "tex"))
        p.add_argument("--cache-dir", default=None,
                       help="cache directory (default: user cache dir)")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="worker threads for table assembly")

    p = sub.add_parser("pair", help="one multiplicity polynomial")
    p.add_argument("--which", choices=WHICH_CHOICES, required=True)
    p.add_argument("--mu", help='multipartition literal, e.g. "1^4,1^4,1^4"')
    p.add_argument("--type", dest="type_literal",
                   help='multitype literal, e.g. "1:2.1,1:2.1,2:1;1:1"')
    common(p)

    p = sub.add_parser("table", help="all nonzero rows for one degree")
    p.add_argument("--which", choices=WHICH_CHOICES, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="run the identity verification suite")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("cache", help="build or clear the disk cache")
    p.add_argument("action", choices=("build", "clear"))
    p.add_argument("--n", type=int, default=None)
    common(p, jobs=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    req = Request(
        command=args.command,
        k=args.k,
        n=getattr(args, "n", None),
        which=getattr(args, "which", None),
        mu=getattr(args, "mu", None),
        type_literal=getattr(args, "type_literal", None),
        fmt=args.fmt,
        cache_dir=args.cache_dir if args.cache_dir is not None else default_cache_dir(),
        jobs=getattr(args, "jobs", 1),
        action=getattr(args, "action", None),
    )
    try:
        if req.command == "pair":
            return cmd_pair(req)
        if req.command == "table":
            return cmd_table(req)
        if req.command == "verify":
            return cmd_verify(req)
        return cmd_cache(req)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
