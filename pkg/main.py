import argparse
import sys
from typing import List, Optional

from src import __version__
from src.commands import (
    GEODESIC_MODES,
    cmd_figures,
    cmd_geodesic,
    cmd_loxodrome,
    cmd_surface,
    cmd_verify,
    emit_report,
    emit_table,
)
from src.errors import PiGeometryError
from src.families import LoxodromeKind
from src.logging_utils import init_logging, log_once
from src.settings import VALID_FORMATS, get_settings
from src.suite_registry import suite_names
from src.surface import MeridianKind

EXIT_OK = 0
EXIT_CONSTRUCTION = 2
EXIT_VERIFICATION = 3

COMMANDS = {
    "surface": cmd_surface,
    "loxodrome": cmd_loxodrome,
    "geodesic": cmd_geodesic,
    "verify": cmd_verify,
    "figures": cmd_figures,
}


def _sign(text: str) -> int:
    value = int(text)
    if value not in (1, -1):
        raise argparse.ArgumentTypeError("sign must be +1 or -1")
    return value


def build_parser(settings: Optional[dict] = None) -> argparse.ArgumentParser:
    settings = settings or get_settings()
    meridian_kinds = [k.value for k in MeridianKind]

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=settings["seed"], help="seed for randomized draws")

    output = argparse.ArgumentParser(add_help=False, parents=[common])
    output.add_argument("--format", choices=VALID_FORMATS, default=settings["format"], help="output format")
    output.add_argument("--out", default=None, help="write data here instead of stdout")

    checked = argparse.ArgumentParser(add_help=False)
    checked.add_argument("--verify", action="store_true", help="run the oracles on the sampled curve")
    checked.add_argument("--report", default=None, help="write the verification report here (default: stderr)")

    parser = argparse.ArgumentParser(
        prog="pigeom",
        description="Rotational surfaces, loxodromes and geodesics in pseudo-isotropic space.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("surface", parents=[output], help="sample a rotational surface on a (u, v) grid")
    p.add_argument("--kind", choices=meridian_kinds, required=True)
    p.add_argument("--profile", required=True, help="profile f(u), e.g. 'exp(u)'")
    p.add_argument("--u-range", required=True, help="LO,HI")
    p.add_argument("--v-range", default="-1,1", help="LO,HI")
    p.add_argument("--grid", default="50,50", help="N or NU,NV")
    p.add_argument("--allow-axis", action="store_true", help="accept a u-range containing u = 0")

    p = sub.add_parser("loxodrome", parents=[output, checked], help="sample a loxodrome")
    p.add_argument("--kind", choices=[k.value for k in LoxodromeKind], required=True)
    p.add_argument("--angle", required=True, help="constant expression, e.g. 'pi/4'")
    p.add_argument("--sign-u", type=_sign, default=None, help="+1 or -1 (tt is fixed to -1)")
    p.add_argument("--sign-v", type=_sign, default=1)
    p.add_argument("--profile", default="exp(u)")
    p.add_argument("--t-range", default="1,2", help="LO,HI not containing 0")
    p.add_argument("--samples", type=int, default=settings["loxodrome_samples"])

    p = sub.add_parser("geodesic", parents=[output, checked], help="sample a geodesic")
    p.add_argument("--mode", choices=GEODESIC_MODES, default="closed-form")
    p.add_argument("--kind", choices=meridian_kinds, default=MeridianKind.TIMELIKE_MERIDIAN.value)
    p.add_argument("--profile", default="cos(u)")
    p.add_argument("--t-range", default="0,2", help="LO,HI")
    p.add_argument("--samples", type=int, default=settings["geodesic_samples"])
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--c1", type=float, default=None)
    p.add_argument("--c2", type=float, default=None)
    p.add_argument("--c5", type=float, default=0.0)
    p.add_argument("--sign-u", type=_sign, default=-1)
    p.add_argument("--a", type=float, default=2.0, help="meridian: u = a t + b")
    p.add_argument("--b", type=float, default=5.0)
    p.add_argument("--v0", type=float, default=0.0, help="meridian angle or parallel start")
    p.add_argument("--u0", type=float, default=1.0, help="parallel: u = u0")
    p.add_argument("--rate", type=float, default=1.0, help="parallel: v = v0 + rate t")
    p.add_argument("--state", default=None, help="integrate: U,V,DU,DV at the start of --t-range")
    p.add_argument("--step", type=float, default=settings["integration_step"])

    p = sub.add_parser("verify", parents=[common], help="run the randomized verification suites")
    p.add_argument("suite", nargs="?", choices=suite_names(), default="all")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")

    p = sub.add_parser("figures", parents=[common], help="write the data of both worked examples")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--samples", type=int, default=settings["loxodrome_samples"])
    p.add_argument("--format", choices=VALID_FORMATS, default=settings["format"])
    return parser


def _write_verify(report, args) -> None:
    text = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_CONSTRUCTION

    logger = init_logging("cli")
    log_once(logger, "cli_started", f"pigeom {__version__} started.")
    logger.info("Command %s: %s", args.command, vars(args))

    try:
        result = COMMANDS[args.command](args, logger)
    except PiGeometryError as exc:
        logger.warning("%s failed: %s: %s", args.command, type(exc).__name__, exc)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONSTRUCTION

    if args.command == "verify":
        _write_verify(result.report, args)
    elif result.table is not None:
        emit_table(result.table, args.format, args.out)
    if args.command != "verify" and result.report is not None:
        emit_report(result.report, args.report)

    if result.report is not None and not result.report.passed:
        for check in result.report.failures():
            sys.stderr.write(f"verification failed: {check.name} (max {check.max_residual:.3e} > {check.tolerance:.1e})\n")
        return EXIT_VERIFICATION
    logger.info("Command %s finished", args.command)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
