"""Command-line front end: run identity suites, evaluate polynomial families,
and expand generating functions, emitting machine-readable reports."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from fractions import Fraction

from .families import (
    FamilyPoint,
    ParamVector,
    asc_phi,
    asc_psi,
    cao_phi3,
    cao_psi3,
    cauchy_P,
    ext_phi5,
    ext_psi5,
    psi_general,
    sa_phi,
    sa_psi,
    v_poly,
)
from .hyper import rphis_series_in_t
from .report import TSV_FIELDS, IdentityReport
from .series import (
    cauchy_ratio_series,
    euler_inverse_series,
    euler_product_series,
)
from .verify import RunConfig, list_suites, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def parse_rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"not a rational: {text!r} ({exc})")


def _rat_list(text: str) -> tuple[Fraction, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_rat(p) for p in text.split(","))


# ---------------------------------------------------------------------------
# check


def _load_config(args) -> RunConfig:
    base: dict = {}
    if args.config:
        with open(args.config) as fh:
            base = json.load(fh)
        unknown = set(base) - set(RunConfig.__dataclass_fields__)
        if unknown:
            raise CliError(f"unknown config keys: {sorted(unknown)}")
    env_seed = os.environ.get("QHYPER_SEED")
    if env_seed is not None:
        base["seed"] = int(env_seed)
    # explicit flags take precedence over config file and environment
    for name in ("suite", "trials", "order", "epsilon_bits", "seed", "report_path", "format"):
        value = getattr(args, name, None)
        if value is not None:
            base[name] = value
    try:
        return RunConfig(**base)
    except (TypeError, ValueError) as exc:
        raise CliError(str(exc))


def _render_json(config: RunConfig, reports: list[IdentityReport]) -> str:
    doc = {
        "suite": config.suite,
        "config": {
            "trials": config.trials,
            "order": config.order,
            "epsilon_bits": config.epsilon_bits,
            "seed": config.seed,
            "format": config.format,
        },
        "reports": [r.to_json_dict() for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _render_tsv(config: RunConfig, reports: list[IdentityReport]) -> str:
    lines = ["\t".join(TSV_FIELDS)]
    for r in reports:
        d = r.to_json_dict()
        lines.append("\t".join(str(d[f]) for f in TSV_FIELDS))
    return "\n".join(lines) + "\n"


def _render_human(config: RunConfig, reports: list[IdentityReport]) -> str:
    width = max((len(r.id) for r in reports), default=8)
    lines = [f"suite {config.suite}: {len(reports)} checks"]
    for r in reports:
        glyph = "ok " if r.passed else "FAIL"
        dev = "0" if r.deviation == 0 else f"~2^{float(_log2(r.deviation)):.1f}"
        note = f"  {r.notes}" if r.notes else ""
        lines.append(f"  {glyph} {r.id:<{width}} trial {r.trial:>2} dev {dev}{note}")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    return "\n".join(lines) + "\n"


def _log2(x: Fraction) -> float:
    import math

    return math.log2(x.numerator) - math.log2(x.denominator)


def cmd_check(args) -> int:
    config = _load_config(args)
    try:
        reports = run_suite(config.suite, config)
    except KeyError:
        print(
            f"unknown suite {config.suite!r}; available: {', '.join(list_suites())}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    renderer = {"json": _render_json, "tsv": _render_tsv, "human": _render_human}
    text = renderer[config.format](config, reports)
    if config.report_path:
        with open(config.report_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# ---------------------------------------------------------------------------
# eval


def _pv_from_args(args) -> ParamVector:
    upper = _rat_list(args.a)
    lower = _rat_list(args.b)
    if args.r is not None and len(upper) != args.r:
        raise CliError(f"--r {args.r} but {len(upper)} upper parameters given")
    if args.s is not None and len(lower) != args.s:
        raise CliError(f"--s {args.s} but {len(lower)} lower parameters given")
    return ParamVector(upper, lower)


def cmd_eval(args) -> int:
    q = parse_rat(args.q)
    n = args.n
    need = lambda name: _require(args, name)
    family = args.family
    if family == "P":
        value = cauchy_P(n, need("x"), need("y"), q)
    elif family == "phi_asc":
        value = asc_phi(n, need("a1"), need("x"), q)
    elif family == "psi_asc":
        value = asc_psi(n, need("a1"), need("x"), q)
    elif family in ("cao_phi3", "cao_psi3"):
        fn = cao_phi3 if family == "cao_phi3" else cao_psi3
        value = fn(n, need("a1"), need("a2"), need("a3"), need("x"), need("y"), q)
    elif family in ("ext_phi5", "ext_psi5"):
        fn = ext_phi5 if family == "ext_phi5" else ext_psi5
        value = fn(
            n, need("a1"), need("a2"), need("a3"), need("a4"), need("a5"),
            need("x"), need("y"), q,
        )
    elif family in ("sa_phi", "sa_psi"):
        fn = sa_phi if family == "sa_phi" else sa_psi
        value = fn(n, _pv_from_args(args), need("x"), need("y"), q)
    elif family == "V":
        value = v_poly(n, _pv_from_args(args), need("x"), need("y"), need("z"), q)
    elif family == "Psi":
        value = psi_general(
            FamilyPoint(need("x"), need("y"), need("z"), n), _pv_from_args(args), q
        )
    else:
        raise CliError(f"unknown family {family!r}")
    print(f"{value.numerator}/{value.denominator} = {float(value):.12g}")
    return EXIT_OK


def _require(args, name: str) -> Fraction:
    value = getattr(args, name, None)
    if value is None:
        raise CliError(f"family {args.family!r} needs --{name}")
    return parse_rat(value)


# ---------------------------------------------------------------------------
# expand


def cmd_expand(args) -> int:
    q = parse_rat(args.q)
    N = args.order
    target = args.target
    need = lambda name: _require(args, name)
    if target == "euler":
        series = euler_product_series(need("c"), q, N)
    elif target == "euler-inv":
        series = euler_inverse_series(need("c"), q, N)
    elif target == "cauchy-ratio":
        series = cauchy_ratio_series(need("x"), need("y"), q, N)
    elif target == "rphis-t":
        series = rphis_series_in_t(_pv_from_args(args), q, need("c"), N)
    elif target in ("gf-psi-lhs", "gf-psi-rhs"):
        from .verify import _psi_gf_lhs, _psi_gf_rhs

        fn = _psi_gf_lhs if target == "gf-psi-lhs" else _psi_gf_rhs
        series = fn(_pv_from_args(args), need("x"), need("y"), need("z"), q, N)
    else:
        raise CliError(f"unknown target {target!r}")
    for k, c in enumerate(series.coeffs):
        print(f"t^{k}\t{c.numerator}/{c.denominator}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhyper",
        description="exact q-hypergeometric polynomial toolkit and identity checker",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run identity-verification suites")
    check.add_argument("--suite", default=None, help="suite id or 'all'")
    check.add_argument("--trials", type=int, default=None)
    check.add_argument("--order", type=int, default=None, help="series truncation order N")
    check.add_argument("--epsilon-bits", dest="epsilon_bits", type=int, default=None)
    check.add_argument("--seed", type=int, default=None)
    check.add_argument("--report-path", dest="report_path", default=None)
    check.add_argument("--format", choices=("json", "tsv", "human"), default=None)
    check.add_argument("--config", default=None, help="JSON file with RunConfig fields")
    check.set_defaults(fn=cmd_check)

    shared_params = {
        "--x": "x",
        "--y": "y",
        "--z": "z",
        "--c": "c",
        "--a1": "a1",
        "--a2": "a2",
        "--a3": "a3",
        "--a4": "a4",
        "--a5": "a5",
    }

    evalp = sub.add_parser("eval", help="evaluate one polynomial family exactly")
    evalp.add_argument(
        "family",
        choices=(
            "P", "phi_asc", "psi_asc", "cao_phi3", "cao_psi3",
            "ext_phi5", "ext_psi5", "sa_phi", "sa_psi", "V", "Psi",
        ),
    )
    evalp.add_argument("--n", type=int, required=True)
    evalp.add_argument("--q", required=True)
    for flag, dest in shared_params.items():
        evalp.add_argument(flag, dest=dest, default=None)
    evalp.add_argument("--a", default="", help="comma-separated upper parameters")
    evalp.add_argument("--b", default="", help="comma-separated lower parameters")
    evalp.add_argument("--r", type=int, default=None, help="expected upper arity")
    evalp.add_argument("--s", type=int, default=None, help="expected lower arity")
    evalp.set_defaults(fn=cmd_eval)

    expand = sub.add_parser("expand", help="print series coefficients t^0..t^N")
    expand.add_argument(
        "target",
        choices=("cauchy-ratio", "euler", "euler-inv", "rphis-t", "gf-psi-lhs", "gf-psi-rhs"),
    )
    expand.add_argument("--order", type=int, default=12)
    expand.add_argument("--q", required=True)
    for flag, dest in shared_params.items():
        expand.add_argument(flag, dest=dest, default=None)
    expand.add_argument("--a", default="", help="comma-separated upper parameters")
    expand.add_argument("--b", default="", help="comma-separated lower parameters")
    expand.add_argument("--r", type=int, default=None)
    expand.add_argument("--s", type=int, default=None)
    expand.set_defaults(fn=cmd_expand)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
