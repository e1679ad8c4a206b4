"""Command-line front end.

Subcommands: build (graph constructors), rho (certified spectral radius),
gamma (domination number with optional certificates), enumerate (filtered
tree classes), verify (claim reports). graph6 is the single interchange
format, so subcommands compose over pipes:

    specdom build T 8 3 2 | specdom rho -

Exit codes: 0 success, 1 verification failure, 2 usage, 3 domain,
4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .config import parse_rational, RunConfig
from .domination import dominating_set_with_supports, gamma_exact, gamma_tree
from .enumeration import TreeClassFilter, filter_class, free_trees, level_sequence_of
from .errors import DomainError, InvalidArgumentError, SpecdomError
from .graphs import (
    Graph,
    build_complete,
    build_corona,
    build_fig8_tree,
    build_H,
    build_path,
    build_S10,
    build_starlike,
    build_T,
    build_Wn,
    from_graph6,
    is_tree,
    to_graph6,
)
from .spectral import compare_rho, spectral_radius
from .polynomials import frac_str
from . import verify as verify_mod


# =====================================================================
# Shared helpers
# =====================================================================


def _dec4(value: Fraction) -> str:
    sign = "-" if value < 0 else ""
    v = abs(value)
    scaled = (v.numerator * 20000 + v.denominator) // (2 * v.denominator)
    return f"{sign}{scaled // 10000}.{scaled % 10000:04d}"


def _read_graph(token: str) -> Graph:
    """A graph6 string, or '-' for one line of stdin."""
    if token == "-":
        token = sys.stdin.readline().strip()
        if not token:
            raise InvalidArgumentError("expected a graph6 line on stdin")
    return from_graph6(token)


def _int_args(values: list[str], *, want: int, usage: str) -> list[int]:
    if len(values) != want:
        raise InvalidArgumentError(f"expected {usage}")
    try:
        return [int(v) for v in values]
    except ValueError:
        raise InvalidArgumentError(f"expected integer params: {usage}") from None


def _int_list(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise InvalidArgumentError(f"expected comma-separated ints, got {text!r}") from None


# =====================================================================
# build
# =====================================================================

_COLON_FAMILIES = {
    "path": (build_path, 1),
    "complete": (build_complete, 1),
    "T": (build_T, 3),
    "Wn": (build_Wn, 1),
    "H": (build_H, 1),
    "T-fig8": (build_fig8_tree, 1),
}


def _build_from_spec(text: str) -> Graph:
    """family:params with ':'-separated integer params, e.g. path:4, T:8:3:2."""
    family, *params = text.split(":")
    if family == "S10":
        if params:
            raise InvalidArgumentError("S10 takes no params")
        return build_S10()
    if family not in _COLON_FAMILIES:
        raise InvalidArgumentError(f"unknown base family {family!r}")
    builder, want = _COLON_FAMILIES[family]
    return builder(*_int_args(params, want=want, usage=f"{family}:{'N:' * want}".rstrip(":")))


def cmd_build(args: argparse.Namespace, config: RunConfig) -> int:
    family = args.family
    params = args.params
    if family == "corona":
        if args.of is None:
            raise InvalidArgumentError("corona needs --of family:params")
        g = build_corona(_build_from_spec(args.of))
    elif family == "starlike":
        g = build_starlike(_int_list(args.a), _int_list(args.b), _int_list(args.c))
        if params:
            raise InvalidArgumentError("starlike takes --a/--b/--c, not positional params")
    elif family == "S10":
        if params:
            raise InvalidArgumentError("S10 takes no params")
        g = build_S10()
    elif family in _COLON_FAMILIES:
        builder, want = _COLON_FAMILIES[family]
        usage = family + " " + " ".join(["N"] * want)
        g = builder(*_int_args(params, want=want, usage=usage))
    else:
        raise InvalidArgumentError(f"unknown family {family!r}")
    print(to_graph6(g))
    if args.pretty:
        for v in range(g.n):
            print(f"{v}: {' '.join(map(str, g.adj[v]))}")
    return 0


# =====================================================================
# rho
# =====================================================================


def cmd_rho(args: argparse.Namespace, config: RunConfig) -> int:
    g = _read_graph(args.graph)
    if args.exact_compare is not None:
        other = _read_graph(args.exact_compare)
        print(compare_rho(g, other).name)
        return 0
    tol = parse_rational(args.tol) if args.tol else config.tol
    enc = spectral_radius(g, tol)
    print(_dec4(enc.midpoint))
    if args.bounds:
        print(f"lo {frac_str(enc.lo)}")
        print(f"hi {frac_str(enc.hi)}")
        if enc.exact_value is not None:
            print(f"exact {enc.exact_value}")
    return 0


# =====================================================================
# gamma
# =====================================================================


def cmd_gamma(args: argparse.Namespace, config: RunConfig) -> int:
    g = _read_graph(args.graph)
    if args.with_supports:
        if not is_tree(g):
            raise DomainError("--with-supports needs a tree")
        cert = dominating_set_with_supports(g)
    elif is_tree(g):
        cert = gamma_tree(g)
    else:
        cert = gamma_exact(g)
    print(cert.gamma)
    if args.certificate:
        print(json.dumps(cert.to_json(), sort_keys=True, separators=(",", ":")))
    return 0


# =====================================================================
# enumerate
# =====================================================================


def _read_checkpoint(path: str) -> tuple[int, ...] | None:
    try:
        with open(path, encoding="ascii") as fh:
            line = fh.read().strip()
    except FileNotFoundError:
        return None
    if not line:
        return None
    return tuple(int(p) for p in line.split(","))


def cmd_enumerate(args: argparse.Namespace, config: RunConfig) -> int:
    flt = TreeClassFilter(
        gamma_eq=args.gamma,
        max_degree_le=args.max_deg,
        leaf_mult_le=args.leaf_mult,
        diameter_eq=args.diameter_eq,
        diameter_le=args.diameter_le,
        caterpillar_only=args.caterpillar,
    )
    checkpoint = args.resume or config.checkpoint_path
    resume_after = _read_checkpoint(checkpoint) if checkpoint else None
    stream = filter_class(
        free_trees(args.n, config=config, resume_after=resume_after), flt
    )
    if args.count or not args.list:
        print(sum(1 for _ in stream))
        return 0
    ckpt_fh = open(checkpoint, "w", encoding="ascii") if checkpoint else None
    try:
        for t in stream:
            print(to_graph6(t.graph))
            if ckpt_fh is not None:
                # checkpoint only what downstream has really received
                sys.stdout.flush()
                ckpt_fh.seek(0)
                ckpt_fh.truncate()
                ckpt_fh.write(",".join(map(str, level_sequence_of(t))) + "\n")
                ckpt_fh.flush()
    finally:
        if ckpt_fh is not None:
            ckpt_fh.close()
    return 0


# =====================================================================
# verify
# =====================================================================


def _parse_n_range(text: str) -> range:
    parts = text.split("..")
    if len(parts) != 2:
        raise InvalidArgumentError(f"--n-range wants a..b, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise InvalidArgumentError(f"--n-range wants integers, got {text!r}") from None
    if lo > hi:
        raise InvalidArgumentError(f"--n-range wants a <= b, got {text!r}")
    return range(lo, hi + 1)


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    ns = _parse_n_range(args.n_range) if args.n_range else None
    if args.claim == "all":
        reports = verify_mod.run_all(ns, config)
    else:
        reports = [verify_mod.run_claim(args.claim, ns, config)]
    fmt = args.format or config.output_format
    if fmt == "csv":
        sys.stdout.write(verify_mod.reports_to_csv(reports))
    elif fmt == "table":
        for r in reports:
            print(f"{r.claim_id:24s} {r.status:14s} "
                  f"counterexamples={len(r.counterexamples)}")
    else:
        sys.stdout.write(verify_mod.reports_to_json_lines(reports))
    if args.junit:
        with open(args.junit, "w", encoding="utf-8") as fh:
            fh.write(verify_mod.reports_to_junit(reports))
    return 0 if verify_mod.all_passed(reports) else 1


# =====================================================================
# Parser
# =====================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specdom",
        description="Exact spectral radius minimization under domination constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a named graph, print graph6")
    p_build.add_argument(
        "family",
        choices=["path", "complete", "corona", "T", "starlike", "Wn", "S10", "H", "T-fig8"],
    )
    p_build.add_argument("params", nargs="*", help="integer params for the family")
    p_build.add_argument("--of", help="corona base as family:params, e.g. path:4")
    p_build.add_argument("--a", help="starlike legs of size 3a+2, comma-separated a values")
    p_build.add_argument("--b", help="starlike legs of size 3b+1, comma-separated b values")
    p_build.add_argument("--c", help="starlike legs of size 3c, comma-separated c values")
    p_build.add_argument("--pretty", action="store_true", help="also print adjacency lists")
    p_build.set_defaults(func=cmd_build)

    p_rho = sub.add_parser("rho", help="certified spectral radius of a graph6 input")
    p_rho.add_argument("graph", help="graph6 string, or - for stdin")
    p_rho.add_argument("--tol", help="enclosure width target, rational like 1/1000000")
    p_rho.add_argument("--bounds", action="store_true", help="also print exact rational bounds")
    p_rho.add_argument(
        "--exact-compare", metavar="G2",
        help="print Less/Equal/Greater comparing against a second graph6",
    )
    p_rho.set_defaults(func=cmd_rho)

    p_gamma = sub.add_parser("gamma", help="domination number of a graph6 input")
    p_gamma.add_argument("graph", help="graph6 string, or - for stdin")
    p_gamma.add_argument("--certificate", action="store_true", help="print certificate JSON")
    p_gamma.add_argument(
        "--with-supports", action="store_true",
        help="certificate containing all support vertices (trees only)",
    )
    p_gamma.set_defaults(func=cmd_gamma)

    p_enum = sub.add_parser("enumerate", help="stream or count a filtered tree class")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--gamma", type=int)
    p_enum.add_argument("--max-deg", type=int)
    p_enum.add_argument("--leaf-mult", type=int)
    p_enum.add_argument("--diameter-eq", type=int)
    p_enum.add_argument("--diameter-le", type=int)
    p_enum.add_argument("--caterpillar", action="store_true")
    mode = p_enum.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the class size (default)")
    mode.add_argument("--list", action="store_true", help="print graph6 lines")
    p_enum.add_argument("--resume", metavar="PATH", help="checkpoint file of the last emitted tree")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run claim verifiers, print JSON-lines reports")
    p_verify.add_argument("claim", help="claim id or 'all'")
    p_verify.add_argument("--n-range", metavar="A..B", help="restrict to this n window")
    p_verify.add_argument("--junit", metavar="PATH", help="also write a JUnit XML report")
    p_verify.add_argument("--format", choices=["json", "csv", "table"])
    p_verify.add_argument("--workers", type=int, help="parallel workers for class scans")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        overrides = {}
        if getattr(args, "workers", None):
            overrides["workers"] = args.workers
        config = RunConfig.from_env(**overrides)
        return args.func(args, config)
    except SpecdomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except BrokenPipeError:
        # Point stdout at devnull so the interpreter's exit flush does not
        # print "Exception ignored" after a downstream head/sed closes early.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
