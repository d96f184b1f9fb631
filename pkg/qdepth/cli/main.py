"""
Command-line interface.

    qdepth [global options] <command> [options]

Machine-readable output goes to stdout (JSON, or CSV/JSON lines for scans);
logs and error responses go to stderr. Exit codes: 0 success, 1 selftest
failure or internal error, 2 parse or configuration error, 3 domain error,
4 resource cap.
"""

import argparse
import json
import random
import sys
from typing import Callable, Dict, List, Optional, TextIO, Tuple

from qdepth import __version__
from qdepth.cli import output
from qdepth.config import BaseQDepthSettings, get_settings
from qdepth.errors import ParseError, SelftestFailedError
from qdepth.errors.handlers import handle_error
from qdepth.factory import configure_runtime
from qdepth.families import (
    ci_symmetry,
    conjecture_scan,
    qdepth_veronese,
    random_complete_intersection,
    veronese_region_scan,
)
from qdepth.ideals import MonomialIdeal, parse_ideal, polarize, polarize_pair
from qdepth.invariants import beta_table, qdepth
from qdepth.monitoring import track_command, write_metrics
from qdepth.oracle import sdepth
from qdepth.poset import (
    alpha_quotient_pair,
    alpha_vector,
    build_poset,
)
from qdepth.selftest import SelftestStatus, run_selftest

QUOTIENT = "quotient"
IDEAL = "ideal"
PAIR = "pair"

ENUMERATION = "enumeration"
INCLUSION_EXCLUSION = "inclusion-exclusion"

Handler = Callable[[argparse.Namespace, BaseQDepthSettings, TextIO], None]


def _dump(model, out: TextIO) -> None:
    out.write(model.model_dump_json(indent=2) + "\n")


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _cell_key(text: str) -> Tuple[int, int, int]:
    values = _int_list(text)
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"expected m,q,t, got {text!r}")
    return values[0], values[1], values[2]


def _read_text(inline: Optional[str], path: Optional[str], label: str) -> str:
    if path is not None:
        try:
            with open(path, encoding="utf-8") as handle:
                return handle.read()
        except OSError as exc:
            raise ParseError(f"Cannot read {label} file {path}: {exc.strerror}")
    if inline is None:
        raise ParseError(f"No {label} given")
    return inline


def _module_pair(args: argparse.Namespace) -> Tuple[MonomialIdeal, MonomialIdeal]:
    """(J, I) for the selected module: S/I, I/0 or J/I."""
    ideal = parse_ideal(_read_text(args.ideal, args.ideal_file, "ideal"), args.n)
    if args.module == QUOTIENT:
        return MonomialIdeal.unit(args.n), ideal
    if args.module == IDEAL:
        return ideal, MonomialIdeal.zero(args.n)
    outer = parse_ideal(_read_text(args.j_ideal, args.j_ideal_file, "J ideal"), args.n)
    return outer, ideal


# Commands


def cmd_qdepth(args: argparse.Namespace, settings: BaseQDepthSettings, out: TextIO) -> None:
    J, I = _module_pair(args)
    _dump(output.qdepth_schema(qdepth(J, I), args.module), out)


def cmd_sdepth(args: argparse.Namespace, settings: BaseQDepthSettings, out: TextIO) -> None:
    J, I = _module_pair(args)
    result = sdepth(J, I, max_n=args.max_n)
    _dump(output.sdepth_schema(result, args.module), out)


def _polarized_alpha(args: argparse.Namespace):
    J, I = _module_pair(args)
    Jp, Ip = polarize_pair(J, I)
    if args.method == ENUMERATION:
        alpha = alpha_vector(build_poset(Jp.polarized, Ip.polarized))
    else:
        alpha = alpha_quotient_pair(Jp.polarized, Ip.polarized)
    return alpha, Jp.added


def cmd_alpha(args: argparse.Namespace, settings: BaseQDepthSettings, out: TextIO) -> None:
    alpha, added = _polarized_alpha(args)
    _dump(output.alpha_schema(alpha, args.module, args.method, n_added=added), out)


def cmd_beta(args: argparse.Namespace, settings: BaseQDepthSettings, out: TextIO) -> None:
    alpha, _ = _polarized_alpha(args)
    _dump(output.beta_schema(beta_table(alpha, args.d)), out)


def cmd_polarize(args: argparse.Namespace, settings: BaseQDepthSettings, out: TextIO) -> None:
    ideal = parse_ideal(_read_text(args.ideal, args.ideal_file, "ideal"), args.n)
    _dump(output.polarization_schema(ideal, polarize(ideal)), out)


def cmd_veronese(args: argparse.Namespace, settings: BaseQDepthSettings, out: TextIO) -> None:
    if args.m_max is not None:
        for result in veronese_region_scan(args.m_max):
            out.write(output.veronese_schema(result).model_dump_json() + "\n")
        return
    if args.n is None or args.m is None:
        raise ParseError("veronese needs --n and --m, or --m-max")
    _dump(output.veronese_schema(qdepth_veronese(args.n, args.m)), out)


def cmd_scan_e(args: argparse.Namespace, settings: BaseQDepthSettings, out: TextIO) -> None:
    workers = args.workers or settings.QDEPTH_WORKERS
    cells = conjecture_scan(
        args.m_max, args.q_max, extra_n=args.extra_n, start=args.start, workers=workers
    )
    if args.format == "csv":
        out.write(output.csv_header())
        for cell in cells:
            out.write(output.csv_row(cell))
    elif args.format == "json":
        _dump(output.cell_list_schema(cells), out)
    else:
        for cell in cells:
            out.write(output.cell_schema(cell).model_dump_json() + "\n")


def cmd_ci_symmetry(
    args: argparse.Namespace, settings: BaseQDepthSettings, out: TextIO
) -> None:
    if not args.scan:
        if args.n is None or args.degs is None:
            raise ParseError("ci-symmetry needs --n and --degs, or --scan")
        _dump(output.ci_symmetry_schema(ci_symmetry(args.n, args.degs, args.d)), out)
        return
    rng = random.Random(settings.QDEPTH_SEED)
    for _ in range(args.count):
        n, degs = random_complete_intersection(rng, args.n_max, m_max=args.m_max)
        report = ci_symmetry(n, degs)
        out.write(output.ci_symmetry_schema(report).model_dump_json() + "\n")


def cmd_selftest(args: argparse.Namespace, settings: BaseQDepthSettings, out: TextIO) -> None:
    result = run_selftest(settings, tags=args.tags)
    if args.format == "json":
        _dump(output.selftest_schema(result), out)
    else:
        out.write(output.selftest_table(result))
    out.flush()
    if result["status"] != SelftestStatus.PASS:
        failed = [c["name"] for c in result["checks"] if c["status"] != SelftestStatus.PASS]
        raise SelftestFailedError(
            f"{result['failed']} selftest check(s) failed", details={"failed": failed}
        )


def cmd_schema(args: argparse.Namespace, settings: BaseQDepthSettings, out: TextIO) -> None:
    schema = output.SCHEMAS[args.target].model_json_schema()
    out.write(json.dumps(schema, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


COMMANDS: Dict[str, Handler] = {
    "qdepth": cmd_qdepth,
    "sdepth": cmd_sdepth,
    "alpha": cmd_alpha,
    "beta": cmd_beta,
    "polarize": cmd_polarize,
    "veronese": cmd_veronese,
    "scan-E": cmd_scan_e,
    "ci-symmetry": cmd_ci_symmetry,
    "selftest": cmd_selftest,
    "schema": cmd_schema,
}


# Parser


def _add_ideal_options(parser: argparse.ArgumentParser, with_module: bool = True) -> None:
    parser.add_argument("--n", type=int, required=True, help="ambient variable count")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--ideal", help="ideal text, e.g. 'x1^2, x1*x2^2'")
    source.add_argument("--ideal-file", help="file holding the ideal text")
    if not with_module:
        return
    parser.add_argument(
        "--module",
        choices=[QUOTIENT, IDEAL, PAIR],
        default=QUOTIENT,
        help="S/I, I itself, or J/I (needs --j-ideal)",
    )
    parser.add_argument("--j-ideal", help="the outer ideal J for --module pair")
    parser.add_argument("--j-ideal-file", help="file holding J for --module pair")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdepth",
        description="Quasi depth and Stanley depth of monomial ideals.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--seed", type=int, help="seed for randomized runs (QDEPTH_SEED)")
    parser.add_argument("--log-level", help="stderr log level (LOG_LEVEL)")
    parser.add_argument(
        "--json-logs", action="store_true", default=None, help="JSON log lines"
    )
    parser.add_argument("--metrics-file", help="Prometheus textfile to write on exit")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("qdepth", help="quasi depth of S/I, I or J/I")
    _add_ideal_options(p)

    p = sub.add_parser("sdepth", help="Stanley depth by exhaustive search")
    _add_ideal_options(p)
    p.add_argument("--max-n", type=int, help="oracle cap (QDEPTH_ORACLE_MAX_N)")

    for name, help_text in (("alpha", "α-vector"), ("beta", "β-table at level d")):
        p = sub.add_parser(name, help=help_text)
        _add_ideal_options(p)
        p.add_argument(
            "--method",
            choices=[INCLUSION_EXCLUSION, ENUMERATION],
            default=INCLUSION_EXCLUSION,
        )
        if name == "beta":
            p.add_argument("--d", type=int, required=True, help="level d")

    p = sub.add_parser("polarize", help="polarization of an ideal")
    _add_ideal_options(p, with_module=False)

    p = sub.add_parser("veronese", help="qdepth of squarefree Veronese ideals")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--m-max", type=int, help="scan the proved region for m <= M_MAX")

    p = sub.add_parser("scan-E", help="scan E(m,q,t,n) over a grid")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--extra-n", type=int, default=0, help="also n = mq+m+q+1..+K")
    p.add_argument("--start", type=_cell_key, help="resume at m,q,t")
    p.add_argument("--format", choices=["csv", "jsonl", "json"], default="csv")
    p.add_argument("--workers", type=int, help="worker processes (QDEPTH_WORKERS)")

    p = sub.add_parser("ci-symmetry", help="β-symmetry of complete intersections")
    p.add_argument("--n", type=int)
    p.add_argument("--degs", type=_int_list, help="generator degrees, e.g. 1,1,2")
    p.add_argument("--d", type=int, help="test only this level")
    p.add_argument("--scan", action="store_true", help="random complete intersections")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--m-max", type=int, default=4)
    p.add_argument("--count", type=int, default=50)

    p = sub.add_parser("selftest", help="golden values and property suites")
    p.add_argument(
        "--tags", nargs="+", help="run only checks with these tags (golden, property, ...)"
    )
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("schema", help="print the JSON schema of a command's output")
    p.add_argument("target", choices=sorted(output.SCHEMAS))
    return parser


def _apply_overrides(
    settings: BaseQDepthSettings, args: argparse.Namespace
) -> BaseQDepthSettings:
    update = {}
    if args.seed is not None:
        update["QDEPTH_SEED"] = args.seed
    if args.log_level:
        update["LOG_LEVEL"] = args.log_level.upper()
    if args.json_logs:
        update["LOG_JSON_FORMAT"] = True
    if args.metrics_file:
        update["METRICS_FILE"] = args.metrics_file
    return settings.model_copy(update=update) if update else settings


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run one command and return its exit code.

    Args:
        argv: Arguments without the program name; sys.argv[1:] by default
        out: Stream for command output; stdout by default
    """
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        settings, logger = configure_runtime(_apply_overrides(get_settings(), args))
    except Exception as exc:
        return handle_error(exc)

    code = 0
    logger.info("command started", extra={"command": args.command})
    try:
        with track_command(args.command):
            COMMANDS[args.command](args, settings, out)
        out.flush()
    except Exception as exc:
        code = handle_error(exc)
    logger.info("command finished", extra={"command": args.command, "exit_code": code})
    write_metrics(settings.METRICS_FILE)
    return code


if __name__ == "__main__":
    sys.exit(main())
