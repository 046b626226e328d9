"""Command line interface.

Exit codes: 0 for success (including "check passed"), 1 when a check or scan
found violations, 2 for usage or parse errors. All numeric output is exact
decimal.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import dimension as char_dimension
from .characters import character
from .closed_forms import ReachQuery, reach_count, reduced_hook, reduced_two_row
from .coefficients import (
    kronecker,
    lr_coefficient,
    reduced_kronecker,
    reduced_tensor_decompose,
    tensor_decompose,
)
from .conjectures import (
    SCAN_CONJECTURES,
    check_chain_conjecture,
    check_dim_log_concavity,
    check_midpoint_kronecker,
    check_midpoint_reduced,
    check_saturation,
    check_schur_log_concavity,
    check_sort_conjecture,
    run_golden_suite,
    scan,
)
from .errors import (
    KroncaveError,
    NotIntegral,
    PadTooSmall,
    PartitionParseError,
    SizeMismatch,
    StabilizationNotDetected,
    StoreIOError,
)
from .partitions import pad
from .store import CoefficientCache, format_partition, parse_partition_text, resolve_cache_path


def _partition_flag(parser, flag, dest, required=True, help_text="partition text, e.g. 3,1 or -"):
    parser.add_argument(flag, dest=dest, type=parse_partition_text, required=required, help=help_text)


def _stabilization_flags(parser):
    parser.add_argument("--window", type=int, default=None, help="plateau length to accept")
    parser.add_argument("--cap", type=int, default=None, help="hard stabilization cap")


def _cache_for(args, enabled=True):
    if not enabled:
        return None
    return CoefficientCache(resolve_cache_path(getattr(args, "cache", None)))


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _report_exit(report, out_path) -> int:
    _emit(report.to_json(indent=2), out_path)
    return 0 if report.passed else 1


def _decomposition_json(items) -> str:
    return json.dumps({format_partition(p): c for p, c in items}, indent=2)


# -- handlers -----------------------------------------------------------------


def _cmd_kron(args) -> int:
    cache = _cache_for(args, enabled=args.cache_all)
    if cache is not None:
        hit = cache.get("kron", args.lam, args.mu, args.nu)
        if hit is not None:
            print(hit)
            return 0
    value = kronecker(args.lam, args.mu, args.nu)
    if cache is not None:
        cache.put("kron", args.lam, args.mu, args.nu, value)
    print(value)
    return 0


def _cmd_lr(args) -> int:
    cache = _cache_for(args, enabled=args.cache_all)
    if cache is not None:
        hit = cache.get("lr", args.lam, args.mu, args.nu)
        if hit is not None:
            print(hit)
            return 0
    value = lr_coefficient(args.lam, args.mu, args.nu)
    if cache is not None:
        cache.put("lr", args.lam, args.mu, args.nu, value)
    print(value)
    return 0


def _cmd_redkron(args) -> int:
    cache = _cache_for(args)
    value = reduced_kronecker(
        args.lam, args.mu, args.nu, window=args.window, cap=args.cap, cache=cache
    )
    print(value)
    return 0


def _cmd_tensor(args) -> int:
    rep = tensor_decompose(args.lam, args.mu)
    _emit(_decomposition_json(rep.items()), args.out)
    return 0


def _cmd_redtensor(args) -> int:
    cache = _cache_for(args)
    rep = reduced_tensor_decompose(
        args.lam, args.mu, window=args.window, cap=args.cap, cache=cache
    )
    _emit(_decomposition_json(rep.items()), args.out)
    return 0


def _cmd_char(args) -> int:
    print(character(args.lam, args.rho))
    return 0


def _cmd_dim(args) -> int:
    shape = pad(args.lam, args.d) if args.d is not None else args.lam
    print(char_dimension(shape))
    return 0


def _cmd_closed_form(args) -> int:
    if args.form == "gamma":
        query = ReachQuery(args.a, args.b, args.c, args.d, args.x, args.y)
        print(reach_count(query))
    elif args.form == "two-row":
        print(reduced_two_row(args.j, args.k, args.nu))
    else:
        print(reduced_hook(args.j, args.k, args.nu))
    return 0


def _cmd_check(args) -> int:
    cache = _cache_for(args)
    name = args.conjecture
    if name == "midpoint-reduced":
        report = check_midpoint_reduced(
            args.lam, args.mu, window=args.window, cap=args.cap, cache=cache
        )
    elif name == "midpoint-kronecker":
        report = check_midpoint_kronecker(args.lam, args.mu)
    elif name == "sort":
        report = check_sort_conjecture(
            args.lam, args.mu, window=args.window, cap=args.cap, cache=cache
        )
    elif name == "chain":
        report = check_chain_conjecture(
            args.part, window=args.window, cap=args.cap, cache=cache
        )
    elif name == "schur-lr":
        report = check_schur_log_concavity(args.lam, args.mu)
    elif name == "dim-log-concavity":
        result = check_dim_log_concavity(args.lam, args.mu, args.d)
        _emit(
            json.dumps({"holds": result.holds, "lhs": result.lhs, "rhs": result.rhs}, indent=2),
            args.out,
        )
        return 0 if result.holds else 1
    elif name == "saturation":
        values = check_saturation(
            args.lam,
            args.mu,
            args.nu,
            args.k_max,
            args.mode,
            window=args.window,
            cap=args.cap,
            cache=cache,
        )
        _emit(json.dumps([[k, nonzero] for k, nonzero in values], indent=2), args.out)
        return 0
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown check {name!r}")
    return _report_exit(report, args.out)


def _cmd_scan(args) -> int:
    cache = _cache_for(args)
    report = scan(
        args.conjecture,
        args.max_boxes,
        jobs=args.jobs,
        chain_n=args.n,
        window=args.window,
        cap=args.cap,
        cache=cache,
    )
    return _report_exit(report, args.out)


def _cmd_verify(args) -> int:
    cache = _cache_for(args)
    results = run_golden_suite(stretch=args.stretch, cache=cache)
    for check in results:
        status = "PASS" if check.passed else "FAIL"
        print(f"[{status}] {check.name} ({check.millis} ms): {check.detail}")
    if args.out:
        payload = {
            "suite": args.suite,
            "passed": all(c.passed for c in results),
            "results": [
                {"name": c.name, "passed": c.passed, "detail": c.detail, "millis": c.millis}
                for c in results
            ],
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return 0 if all(c.passed for c in results) else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kroncave",
        description="Exact Kronecker, reduced Kronecker, and Littlewood-Richardson coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def triple(p):
        _partition_flag(p, "--lambda", "lam")
        _partition_flag(p, "--mu", "mu")
        _partition_flag(p, "--nu", "nu")

    p = sub.add_parser("kron", help="Kronecker coefficient of three same-size partitions")
    triple(p)
    p.add_argument("--cache", default=None)
    p.add_argument("--cache-all", action="store_true", help="persist kron results too")
    p.set_defaults(handler=_cmd_kron)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    triple(p)
    p.add_argument("--cache", default=None)
    p.add_argument("--cache-all", action="store_true", help="persist lr results too")
    p.set_defaults(handler=_cmd_lr)

    p = sub.add_parser("redkron", help="reduced (stable) Kronecker coefficient")
    triple(p)
    _stabilization_flags(p)
    p.add_argument("--cache", default=None)
    p.set_defaults(handler=_cmd_redkron)

    p = sub.add_parser("tensor", help="full S_n tensor product decomposition")
    _partition_flag(p, "--lambda", "lam")
    _partition_flag(p, "--mu", "mu")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_tensor)

    p = sub.add_parser("redtensor", help="stable product of two classes")
    _partition_flag(p, "--lambda", "lam")
    _partition_flag(p, "--mu", "mu")
    _stabilization_flags(p)
    p.add_argument("--cache", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_redtensor)

    p = sub.add_parser("char", help="irreducible character value on a cycle type")
    _partition_flag(p, "--lambda", "lam")
    _partition_flag(p, "--rho", "rho", help_text="cycle type as partition text")
    p.set_defaults(handler=_cmd_char)

    p = sub.add_parser("dim", help="dimension (standard tableau count), optionally padded")
    _partition_flag(p, "--lambda", "lam")
    p.add_argument("--d", type=int, default=None, help="pad to a partition of d first")
    p.set_defaults(handler=_cmd_dim)

    p = sub.add_parser("closed-form", help="closed-form special family values")
    forms = p.add_subparsers(dest="form", required=True)
    g = forms.add_parser("gamma", help="rectangle reach count")
    for flag in ("--a", "--b", "--c", "--d", "--x", "--y"):
        g.add_argument(flag, dest=flag[2:], type=int, required=True)
    g.set_defaults(handler=_cmd_closed_form)
    tr = forms.add_parser("two-row", help="two one-row shapes")
    tr.add_argument("--j", type=int, required=True)
    tr.add_argument("--k", type=int, required=True)
    _partition_flag(tr, "--nu", "nu")
    tr.set_defaults(handler=_cmd_closed_form)
    hk = forms.add_parser("hook", help="two one-column shapes")
    hk.add_argument("--j", type=int, required=True)
    hk.add_argument("--k", type=int, required=True)
    _partition_flag(hk, "--nu", "nu")
    hk.set_defaults(handler=_cmd_closed_form)

    p = sub.add_parser("check", help="run one conjecture check on a single input")
    checks = p.add_subparsers(dest="conjecture", required=True)
    for name in ("midpoint-reduced", "midpoint-kronecker", "sort", "schur-lr"):
        c = checks.add_parser(name)
        _partition_flag(c, "--lambda", "lam")
        _partition_flag(c, "--mu", "mu")
        _stabilization_flags(c)
        c.add_argument("--cache", default=None)
        c.add_argument("--out", default=None)
        c.set_defaults(handler=_cmd_check)
    c = checks.add_parser("chain")
    c.add_argument(
        "--part",
        action="append",
        type=parse_partition_text,
        required=True,
        help="repeatable partition text",
    )
    _stabilization_flags(c)
    c.add_argument("--cache", default=None)
    c.add_argument("--out", default=None)
    c.set_defaults(handler=_cmd_check)
    c = checks.add_parser("dim-log-concavity")
    _partition_flag(c, "--lambda", "lam")
    _partition_flag(c, "--mu", "mu")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--out", default=None)
    c.set_defaults(handler=_cmd_check)
    c = checks.add_parser("saturation")
    _partition_flag(c, "--lambda", "lam")
    _partition_flag(c, "--mu", "mu")
    _partition_flag(c, "--nu", "nu")
    c.add_argument("--k-max", dest="k_max", type=int, required=True)
    c.add_argument("--mode", choices=("kronecker", "reduced"), default="reduced")
    _stabilization_flags(c)
    c.add_argument("--cache", default=None)
    c.add_argument("--out", default=None)
    c.set_defaults(handler=_cmd_check)

    p = sub.add_parser("scan", help="scan a conjecture over all pairs within a box budget")
    p.add_argument("conjecture", choices=[n.replace("_", "-") for n in SCAN_CONJECTURES])
    p.add_argument("--max-boxes", dest="max_boxes", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--n", type=int, default=3, help="tuple length for chain scans")
    _stabilization_flags(p)
    p.add_argument("--cache", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser("verify", help="run a named golden verification suite")
    p.add_argument("suite", choices=("paper",))
    p.add_argument("--stretch", action="store_true", help="include the expensive scaled probe")
    p.add_argument("--cache", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except StabilizationNotDetected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        PartitionParseError,
        NotIntegral,
        SizeMismatch,
        PadTooSmall,
        StoreIOError,
        KroncaveError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
