"""Command-line front end.

Subcommands: ``eulerian`` (triangle rows), ``verify`` (identity checks over
an (n, m) grid), ``map`` (vector to permutation), ``fibers`` (fiber
reports), ``missing`` (missing-vector census), ``oeis-check`` (b-file
cross-check).  Exit codes: 0 pass, 1 verification failure, 2 usage error.

Output formats: plain text (default), JSON, CSV.  Worker parallelism for
the big vector sweeps comes from --jobs or the WORPITZKY_JOBS environment
variable; results are identical for any worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import map_b, map_d, oeis
from .eulerian import eulerian_row
from .exactnum import QPolynomial
from .signed_perm import SignedPermutation, enumerate_bn, enumerate_dn
from .sigma_vectors import parse_vector

JOBS_ENV_VAR = "WORPITZKY_JOBS"

IDENTITIES = ("worpitzky-a", "worpitzky-b", "worpitzky-d", "balance-d", "erratum-d")


class UsageError(Exception):
    pass


D_IDENTITIES = ("worpitzky-d", "balance-d", "erratum-d")


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: command, grid, type tag, output and parallelism."""

    command: str
    n_range: tuple[int, int] | None = None
    m_range: tuple[int, int] | None = None
    group: str | None = None
    q_mode: bool = False
    fmt: str = "text"
    jobs: int = 1
    oeis_source: str | None = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        n_range = getattr(args, "n_range", None)
        if n_range is None and hasattr(args, "n"):
            n_range = (args.n, args.n)
        m_range = getattr(args, "m_range", None)
        if m_range is None and hasattr(args, "m"):
            m_range = (args.m, args.m)
        cfg = cls(
            command=args.command,
            n_range=n_range,
            m_range=m_range,
            group=getattr(args, "type", None),
            q_mode=getattr(args, "q", False),
            fmt=getattr(args, "format", "text"),
            jobs=max(1, getattr(args, "jobs", 1)),
            oeis_source=getattr(args, "bfile", None) or getattr(args, "fetch", None),
        )
        needs_d = (
            cfg.group == "D" and args.command in ("fibers", "eulerian")
        ) or args.command == "missing" or getattr(args, "identity", None) in D_IDENTITIES
        if needs_d and cfg.n_range is not None and cfg.n_range[0] < 2:
            raise UsageError(
                f"{getattr(args, 'identity', args.command)} requires n >= 2"
            )
        return cfg


def parse_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def poly_text(p) -> str:
    return str(p) if isinstance(p, QPolynomial) else str(p)


# -- subcommand handlers ----------------------------------------------------

def cmd_eulerian(args, cfg: RunConfig) -> int:
    row = eulerian_row(cfg.group, args.n)
    if cfg.fmt == "json":
        print(row.to_json())
    elif cfg.fmt == "csv":
        print(row.to_csv(), end="")
    elif cfg.q_mode:
        print(",".join("[" + ",".join(map(str, p.to_list())) + "]" for p in row.entries))
    else:
        print(",".join(str(c) for c in row.at_q1()))
    return 0


def _verify_one(identity: str, n: int, m: int, jobs: int):
    if identity == "worpitzky-a":
        return map_b.verify_worpitzky_a(n, m)
    if identity == "worpitzky-b":
        return map_b.verify_worpitzky_b(n, m, jobs=jobs)
    if identity == "worpitzky-d":
        return map_d.verify_worpitzky_d_q1(n, m)
    if identity == "balance-d":
        return map_d.verify_balance_d_q(n, m, jobs=jobs)
    if identity == "erratum-d":
        return map_d.erratum_report_d(n, m)
    raise UsageError(f"unknown identity {identity!r}")


def cmd_verify(args, cfg: RunConfig) -> int:
    n_lo, n_hi = cfg.n_range
    m_lo, m_hi = cfg.m_range
    if n_lo < 1 or m_lo < 0:
        raise UsageError("need n >= 1 and m >= 0")
    reports = [
        _verify_one(args.identity, n, m, cfg.jobs)
        for n in range(n_lo, n_hi + 1)
        for m in range(m_lo, m_hi + 1)
    ]
    ok = all(r.passed for r in reports)
    if cfg.fmt == "json":
        print(json.dumps({"reports": [r.to_json_dict() for r in reports], "pass": ok}))
    elif cfg.fmt == "csv":
        print("identity,n,m,lhs,rhs,pass")
        for r in reports:
            print(f"{r.identity},{r.n},{r.m},{poly_text(r.lhs)},{poly_text(r.rhs)},{r.passed}")
    else:
        for r in reports:
            if r.identity == "erratum-d":
                status = "CONFIRMED" if r.passed else "NOT CONFIRMED"
                print(
                    f"erratum-d n={r.n} m={r.m}: {status}  printed={poly_text(r.lhs)} "
                    f"rhs={poly_text(r.rhs)} (at q=1: {r.extras['printed_at_q1']} "
                    f"vs {r.extras['rhs_at_q1']})"
                )
            else:
                status = "PASS" if r.passed else "FAIL"
                line = (
                    f"{r.identity} n={r.n} m={r.m}: {status}  "
                    f"lhs={poly_text(r.lhs)} rhs={poly_text(r.rhs)}"
                )
                if "brute" in r.extras:
                    line += f" brute={poly_text(r.extras['brute'])}"
                print(line)
    return 0 if ok else 1


def cmd_map(args, cfg: RunConfig) -> int:
    v = parse_vector(args.vector, args.m)
    if cfg.group == "B":
        print(map_b.phi(v, args.m).format())
        return 0
    if len(v) < 2:
        raise UsageError("type-D map requires vectors of length >= 2")
    print(str(map_d.psi(v, args.m)))
    return 0


def cmd_fibers(args, cfg: RunConfig) -> int:
    report_fn = map_b.fiber_report_b if cfg.group == "B" else map_d.fiber_report_d
    if args.sigma is not None:
        sigma = SignedPermutation.parse(args.sigma)
        if sigma.n != args.n:
            raise UsageError(f"--sigma has {sigma.n} entries, expected {args.n}")
        if cfg.group == "D" and not sigma.is_in_dn():
            raise UsageError("--sigma must have an even number of negative entries")
        reports = [report_fn(sigma, args.m, include_vectors=True)]
    else:
        if cfg.group == "B":
            oracle = map_b.phi_fibers(args.n, args.m)
            group = enumerate_bn(args.n)
        else:
            oracle, _ = map_d.psi_fibers(args.n, args.m)
            group = enumerate_dn(args.n)
        reports = [
            report_fn(sigma, args.m, include_vectors=args.vectors, oracle=oracle)
            for sigma in group
        ]
    ok = all(r.passed for r in reports)
    if cfg.fmt == "json":
        payload = [r.to_json_dict() for r in reports]
        print(json.dumps(payload[0] if args.sigma is not None else payload))
    else:
        for r in reports:
            print(
                f"sigma={r.sigma.format()} m={r.m} expected={r.expected_size} "
                f"actual={r.oracle_size} {'ok' if r.passed else 'MISMATCH'}"
            )
            if r.vectors is not None and args.sigma is not None:
                for v in r.vectors:
                    print("  " + ",".join(str(a) for a in v))
    return 0 if ok else 1


def cmd_missing(args, cfg: RunConfig) -> int:
    census = map_d.missing_census(args.n, args.m, jobs=cfg.jobs)
    if cfg.fmt == "json":
        print(json.dumps(census.to_json_dict()))
    else:
        for case in map_d.MISSING_CASES:
            print(
                f"{case}: count={census.counts[case]} weight={census.weights[case]}"
            )
        print(f"total: count={census.total_count} weight={census.total_weight}")
        print(
            f"closed forms: case1={map_d.missing_case1_closed(args.n, args.m)} "
            f"A={map_d.missing_case2a_closed(args.n, args.m)} "
            f"B={map_d.missing_cases2b3_closed(args.n, args.m)} "
            f"total={map_d.missing_total_closed(args.n, args.m)} "
            f"weight={map_d.missing_weight_closed(args.n, args.m)}"
        )
        print("pass" if census.passed else "FAIL")
    return 0 if census.passed else 1


def cmd_oeis_check(args, cfg: RunConfig) -> int:
    report = oeis.check_sequence(
        args.seq, args.max_n, bfile_path=args.bfile, fetch_url=args.fetch
    )
    if report.warning:
        print(f"warning: {report.warning}", file=sys.stderr)
    if cfg.fmt == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        for n, ref, got, ok in report.rows:
            status = "ok" if ok else "MISMATCH"
            print(f"{args.seq} n={n}: {status} reference={list(ref)} computed={list(got)}")
    return 0 if report.passed else 1


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="worpitzky",
        description="Exact Eulerian-number and Worpitzky-identity engine "
        "for signed and even-signed permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = {"choices": ["text", "json", "csv"], "default": "text"}

    p = sub.add_parser("eulerian", help="print one Eulerian triangle row")
    p.add_argument("--type", required=True, choices=["A", "B", "D"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--q", action="store_true", help="print q-coefficient lists")
    p.add_argument("--format", **fmt)
    p.set_defaults(fn=cmd_eulerian)

    p = sub.add_parser("verify", help="verify an identity over an (n, m) grid")
    p.add_argument("--identity", required=True, choices=list(IDENTITIES))
    p.add_argument("--n-range", required=True, type=parse_range, metavar="A..B")
    p.add_argument(
        "--m-range",
        required=True,
        type=parse_range,
        metavar="C..D",
        help="m grid (plays the role of k for worpitzky-a)",
    )
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--format", **fmt)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("map", help="map a vector to a signed permutation")
    p.add_argument("--type", required=True, choices=["B", "D"])
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--vector", required=True)
    p.set_defaults(fn=cmd_map)

    p = sub.add_parser("fibers", help="fiber sizes and members")
    p.add_argument("--type", required=True, choices=["B", "D"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--sigma", help="single permutation (comma-separated window)")
    p.add_argument(
        "--vectors", action="store_true", help="include vectors in all-sigma reports"
    )
    p.add_argument("--format", **fmt)
    p.set_defaults(fn=cmd_fibers)

    p = sub.add_parser("missing", help="census of vectors without a type-D partner")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--format", **fmt)
    p.set_defaults(fn=cmd_missing)

    p = sub.add_parser("oeis-check", help="cross-check triangle rows against OEIS data")
    p.add_argument("--seq", required=True, choices=sorted(oeis.SEQUENCES))
    p.add_argument("--max-n", required=True, type=int)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--bfile", help="local b-file path")
    src.add_argument("--fetch", help="b-file URL (falls back to fixture on failure)")
    p.add_argument("--format", **fmt)
    p.set_defaults(fn=cmd_oeis_check)

    return parser


def _join_dash_values(argv: list[str]) -> list[str]:
    """Turn ``--vector -2,0,0`` into ``--vector=-2,0,0`` so argparse does not
    mistake a value with a leading minus for an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--vector", "--sigma") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_dash_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        cfg = RunConfig.from_args(args)
        return args.fn(args, cfg)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
