"""Command-line interface: batch verification and ad-hoc evaluation.

    qsl2 verify <suite|all> [--orders LIST|A..B] [--degree-bound N]
                [--m-max N] [--samples N] [--seed S]
                [--format text|json] [--config PATH]
    qsl2 eval nf <expr>
    qsl2 eval pair <element> <uword>
    qsl2 eval qbinom <n> <k>
    qsl2 eval chebyshev <m>

Exit codes: 0 all cases passed, 1 at least one case failed, 2 unknown suite
or malformed configuration.  With the same seed and configuration the JSON
output is byte-identical up to the duration fields.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from typing import List, Optional

from .bigon import normal_form, parse_word_expr, zero
from .pairing import hopf_pair, parse_uword
from .qcomb import chebyshev_T, qbinom
from .report import render_json, render_text
from .scalars import GENERIC
from .suites import (
    ConfigError,
    SuiteConfig,
    parse_config_file,
    parse_orders,
    run_suites,
    suite_names,
)

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsl2",
        description="Exact verification suites for quantum SL(2) at roots of unity",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify",
        help="run one verification suite, or all of them",
        description="Known suites: " + ", ".join(suite_names() + ["all"]),
    )
    verify.add_argument("suite", help="suite name or 'all'")
    verify.add_argument("--orders", help="root orders: comma list 1,3,12 or range A..B")
    verify.add_argument("--degree-bound", type=int, dest="degree_bound")
    verify.add_argument("--m-max", type=int, dest="m_max")
    verify.add_argument("--samples", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--format", choices=("text", "json"))
    verify.add_argument("--config", help="line-oriented `key = value` file")

    ev = sub.add_parser("eval", help="ad-hoc exact computations")
    ev_sub = ev.add_subparsers(dest="eval_command", required=True)

    nf = ev_sub.add_parser("nf", help="normal form of a coordinate-ring expression")
    nf.add_argument("expr", help="e.g. 'd*a + (2*w^2) * b*c^2'")

    pair = ev_sub.add_parser("pair", help="Hopf pairing of an element with a word")
    pair.add_argument("element", help="coordinate-ring expression, e.g. 'b*c'")
    pair.add_argument("uword", help="e.g. 'E(1) K F(2)' or '1' for the empty word")

    qb = ev_sub.add_parser("qbinom", help="Gaussian binomial as a polynomial in the base")
    qb.add_argument("n", type=int)
    qb.add_argument("k", type=int)

    ch = ev_sub.add_parser("chebyshev", help="power-sum Chebyshev polynomial T_m")
    ch.add_argument("m", type=int)
    return parser


def _build_config(args: argparse.Namespace) -> SuiteConfig:
    cfg = SuiteConfig()
    if args.config:
        cfg = parse_config_file(args.config, cfg)
    overrides = {}
    if args.orders is not None:
        overrides["orders"] = parse_orders(args.orders)
    for key in ("degree_bound", "m_max", "samples", "seed", "format"):
        value = getattr(args, key)
        if value is not None:
            overrides[key] = value
    cfg = replace(cfg, **overrides)
    if args.suite == "all":
        cfg = replace(cfg, suites=suite_names())
    else:
        cfg = replace(cfg, suites=[args.suite])
    cfg.validate()
    return cfg


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    reports = run_suites(cfg)
    if cfg.format == "json":
        print(render_json(reports))
    else:
        print(render_text(reports))
    return 0 if all(rep.ok() for rep in reports) else 1


def _cmd_eval(args: argparse.Namespace) -> int:
    if args.eval_command == "nf":
        total = zero(GENERIC)
        for coeff, word in parse_word_expr(args.expr, GENERIC):
            total = total + normal_form(word, GENERIC).scale(coeff)
        print(total)
    elif args.eval_command == "pair":
        total = zero(GENERIC)
        for coeff, word in parse_word_expr(args.element, GENERIC):
            total = total + normal_form(word, GENERIC).scale(coeff)
        print(hopf_pair(total, parse_uword(args.uword)))
    elif args.eval_command == "qbinom":
        print(qbinom(args.n, args.k))
    else:
        print(chebyshev_T(args.m))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_eval(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
