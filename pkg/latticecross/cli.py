"""Command line front end: ``latticecross {gpoly,hpoly,stats,encode,biject,verify}``.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import (
    Any,
    Union, Optional,
    Tuple, List, Dict, Sequence,
    Callable,
)

from .__version__ import __version__
from .errors import LatticeCrossException, exit_status
from .models import CrossingKind, Crossing, Point, MARKER_COLORS
from .qpoly import QTPoly, to_text, to_latex
from .paths import LatticePath, parse_path, stats, line_crossings, diagonal_crossings
from .arrays import TwoRowedArray, encode_path, array_crossings
from . import arrays
from . import pair_arrays
from .pair_arrays import ArrayPair
from .formulas import LineQuery, PairQuery, g_poly, h_poly
from . import oracle

_logger = logging.getLogger(__name__)

# ====================================================================
# Constants
# ====================================================================

PROG = "latticecross"
FORMATS = ("text", "json", "latex")
COLOR_ENV_VAR = "LATTICECROSS_COLOR"

ARRAY_MAPS = ("alpha", "beta", "nu", "reduce", "expand")
PAIR_MAPS = ("gamma", "delta", "sigma", "gamma0", "reduce", "expand")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

# ====================================================================
# Parser
# ====================================================================

def _point(text: str) -> Point:
    try:
        return Point.from_json(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Enumerate lattice paths by descents, major index and crossings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=FORMATS, default="text", help="Output format (default: text).")
    parser.add_argument("--threads", type=int, default=None, help="Worker processes for oracle runs.")
    parser.add_argument("--no-color", action="store_true", dest="no_color", help="Disable colored crossing markers.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Log debug messages.")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Only log warnings and errors.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gpoly", help="Paths crossing a horizontal line at least r times.")
    p.add_argument("--a", type=int, required=True, help="Number of up-steps.")
    p.add_argument("--b", type=int, required=True, help="Number of down-steps.")
    p.add_argument("--ell", type=int, default=0, help="Height of the line (default: 0).")
    p.add_argument("--r", type=int, default=0, help="Crossing threshold (default: 0).")
    p.add_argument("--oracle", action="store_true", help="Enumerate instead of using the closed form.")

    p = sub.add_parser("hpoly", help="Pairs of paths crossing each other at least r times.")
    p.add_argument("--a1", type=_point, required=True, help="Start of P, as X,Y.")
    p.add_argument("--a2", type=_point, required=True, help="Start of Q, as X,Y.")
    p.add_argument("--bp", type=_point, required=True, help="End of P, as X,Y.")
    p.add_argument("--bq", type=_point, required=True, help="End of Q, as X,Y.")
    p.add_argument("--r", type=int, default=0, help="Crossing threshold (default: 0).")
    p.add_argument("--oracle", action="store_true", help="Enumerate instead of using the closed form.")

    p = sub.add_parser("stats", help="Descents, major index, peaks and crossings of a path.")
    p.add_argument("--path", required=True, help="Step word over N/E or U/D.")
    p.add_argument("--start", type=_point, default=Point(0, 0), help="Start point (default: 0,0).")
    p.add_argument("--ud", action="store_true", help="Display the U/D view.")
    p.add_argument("--line", type=int, default=None, help="Count crossings of this line instead of the diagonal.")

    p = sub.add_parser("encode", help="Encode a path as a two-rowed array.")
    p.add_argument("--path", required=True, help="Step word over N/E or U/D.")
    p.add_argument("--start", type=_point, default=Point(0, 0), help="Start point (default: 0,0).")

    p = sub.add_parser("biject", help="Apply a crossing map to an array or a pair of arrays.")
    p.add_argument("--map", required=True, choices=sorted(set(ARRAY_MAPS + PAIR_MAPS)), dest="map_name")
    p.add_argument("--r", type=int, default=1, help="Crossing the map acts on (default: 1).")
    p.add_argument("--input", required=True, help="JSON file with an array, a pair or a path; - for stdin.")

    p = sub.add_parser("verify", help="Compare closed forms and bijections with brute force.")
    p.add_argument("suite", choices=("line", "pairs", "lemmas", "bijections"))
    p.add_argument("--max-a", type=int, default=oracle.DEFAULT_MAX_A, dest="max_a")
    p.add_argument("--max-b", type=int, default=oracle.DEFAULT_MAX_B, dest="max_b")
    p.add_argument("--ell-margin", type=int, default=oracle.DEFAULT_ELL_MARGIN, dest="ell_margin")
    p.add_argument("--r-cap", type=int, default=None, dest="r_cap")
    p.add_argument("--window", type=int, default=None, help="Largest coordinate (default: 5 for pairs, 3 otherwise).")
    p.add_argument("--report", default=None, help="Write one JSON report per line to this file.")

    return parser

# ====================================================================
# Output helpers
# ====================================================================

class _Output:
    def __init__(self, fmt: str, color: bool):
        self.fmt = fmt
        self.color = color

    def marker(self, crossing: Crossing) -> str:
        text = str(crossing)
        if not self.color: return text
        return MARKER_COLORS[crossing.kind].ansi(text)

    def poly(self, query: Dict[str,Any], value: QTPoly):
        if self.fmt == "json":
            print(json.dumps({"query": query, "value": value.json()}))
        elif self.fmt == "latex":
            print(to_latex(value))
        else:
            print(to_text(value))

def _use_color(args) -> bool:
    if args.no_color: return False
    if os.environ.get(COLOR_ENV_VAR, "1") == "0": return False
    return sys.stdout.isatty()

def _configure_logging(args):
    level = logging.INFO
    if args.verbose: level = logging.DEBUG
    if args.quiet: level = logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

# ====================================================================
# Subcommands
# ====================================================================

def _cmd_gpoly(args, out: _Output) -> int:
    query = LineQuery(args.a, args.b, args.ell, args.r)
    if args.oracle:
        value = oracle.at_least(oracle.oracle_g(args.a, args.b, args.ell, args.threads), args.r)
    else:
        value = g_poly(query)
    out.poly(query.json(), value)
    return EXIT_OK

def _cmd_hpoly(args, out: _Output) -> int:
    query = PairQuery.from_targets(args.a1, args.a2, args.bp, args.bq, args.r)
    if args.oracle:
        values = oracle.oracle_h(args.a1, args.a2, args.bp, args.bq, args.threads)
        value = oracle.at_least(values, args.r)
    else:
        value = h_poly(query)
    out.poly(query.json(), value)
    return EXIT_OK

def _cmd_stats(args, out: _Output) -> int:
    path = parse_path(args.path, args.start)
    s = stats(path)
    if args.line is not None:
        crossings = line_crossings(path, args.line)
    else:
        crossings = diagonal_crossings(path)
    ud = True if args.ud else None
    if out.fmt == "json":
        print(json.dumps({
            "path": {"start": path.start.json(), "steps": path.word(ud)},
            "des": s.des, "maj": s.maj, "peaks": s.peaks,
            "crossings": [c.json() for c in crossings],
        }))
        return EXIT_OK
    print(f"path {path.start}+{path.word(ud)}")
    print(f"des={s.des} maj={s.maj} peaks={s.peaks} crossings={len(crossings)}")
    for crossing in crossings:
        print("  " + out.marker(crossing))
    return EXIT_OK

def _cmd_encode(args, out: _Output) -> int:
    array = encode_path(parse_path(args.path, args.start))
    crossings = array_crossings(array)
    if out.fmt == "json":
        print(json.dumps({"array": array.json(), "crossings": [c.json() for c in crossings]}))
        return EXIT_OK
    print(array)
    for crossing in crossings:
        print("  " + out.marker(crossing))
    return EXIT_OK

def _load_input(name: str) -> Union[TwoRowedArray,ArrayPair]:
    if name == "-":
        data = json.load(sys.stdin)
    else:
        with open(name, "r", encoding="utf-8") as f:
            data = json.load(f)
    if "first" in data:
        return ArrayPair.from_json(data)
    if "steps" in data:
        return encode_path(LatticePath.from_json(data))
    return TwoRowedArray.from_json(data)

def _describe(value: Union[TwoRowedArray,ArrayPair], r: int) -> str:
    # the crossing a map acts on, as entry names and values
    if isinstance(value, ArrayPair):
        crossing = pair_arrays.pair_crossings(value)[r - 1]
        name = "gamma" if crossing.kind is CrossingKind.UPWARD else "delta"
    else:
        crossing = array_crossings(value)[r - 1]
        name = "alpha" if crossing.kind is CrossingKind.UPWARD else "beta"
    where = ", ".join(f"{row}{i}={value.entry(row, i)}" for row, i in crossing.entries)
    return f"{name}_{r} at {where} ({crossing.kind.value})"

def _crossing_map(value: Union[TwoRowedArray,ArrayPair], r: int):
    if isinstance(value, ArrayPair):
        return pair_arrays.crossing_map(r, value)
    return arrays.crossing_map(r, value)

def _apply(map_name: str, r: int, value: Union[TwoRowedArray,ArrayPair]) -> Tuple[Union[TwoRowedArray,ArrayPair],List[str]]:
    is_pair = isinstance(value, ArrayPair)
    allowed = PAIR_MAPS if is_pair else ARRAY_MAPS
    if map_name not in allowed:
        what = "a pair of arrays" if is_pair else "a single array"
        raise ValueError(f"map {map_name!r} does not apply to {what}; choose from {allowed}")

    trace: List[str] = []
    if map_name == "nu":
        return arrays.nu(value), ["nu"]
    if map_name == "sigma":
        return pair_arrays.sigma(value), ["sigma"]
    if map_name == "gamma0":
        return pair_arrays.gamma0(value), ["gamma_0"]
    if map_name in ("reduce", "expand"):
        order = range(r, 0, -1) if map_name == "reduce" else range(1, r + 1)
        for s in order:
            image = _crossing_map(value, s)
            trace.append(_describe(value, s))
            value = image
        return value, trace

    fn: Callable = {
        "alpha": arrays.alpha, "beta": arrays.beta,
        "gamma": pair_arrays.gamma, "delta": pair_arrays.delta,
    }[map_name]
    image = fn(r, value)
    return image, [_describe(value, r)]

def _cmd_biject(args, out: _Output) -> int:
    value = _load_input(args.input)
    image, trace = _apply(args.map_name, args.r, value)
    if out.fmt == "json":
        print(json.dumps({"input": value.json(), "output": image.json(), "trace": trace}))
        return EXIT_OK
    print(value)
    for line in trace:
        print(f"  {line}")
    print(image)
    crossings = (
        pair_arrays.pair_crossings(image) if isinstance(image, ArrayPair) else array_crossings(image)
    )
    for crossing in crossings:
        print("  " + out.marker(crossing))
    return EXIT_OK

def _window(args) -> int:
    return oracle.DEFAULT_WINDOW if args.window is None else args.window

def _cmd_verify(args, out: _Output) -> int:
    if args.suite == "line":
        r_cap = oracle.DEFAULT_R_CAP if args.r_cap is None else args.r_cap
        reports = oracle.sweep_verify_line(args.max_a, args.max_b, args.ell_margin, r_cap, args.threads)
    elif args.suite == "pairs":
        window = oracle.DEFAULT_PAIR_WINDOW if args.window is None else args.window
        r_cap = oracle.DEFAULT_PAIR_R_CAP if args.r_cap is None else args.r_cap
        reports = oracle.sweep_verify_pairs(window, r_cap, args.threads)
    elif args.suite == "lemmas":
        reports = oracle.sweep_verify_lemmas(_window(args))
    else:
        reports = oracle.sweep_verify_bijections(_window(args))

    if args.report:
        with open(args.report, "w", encoding="utf-8") as f:
            oracle.write_reports(reports, f)

    failed = [report for report in reports if not report.equal]
    if out.fmt == "json":
        print(json.dumps({
            "suite": args.suite,
            "checked": len(reports),
            "failed": [report.json() for report in failed],
        }))
    else:
        print(f"{args.suite}: {len(reports)} checks, {len(failed)} failed")
        for report in failed:
            print(f"  {report.query}: {report.formula} != {report.oracle}")
    return EXIT_MISMATCH if failed else EXIT_OK

COMMANDS = {
    "gpoly": _cmd_gpoly,
    "hpoly": _cmd_hpoly,
    "stats": _cmd_stats,
    "encode": _cmd_encode,
    "biject": _cmd_biject,
    "verify": _cmd_verify,
}

def main(argv: Optional[Sequence[str]]=None) -> int:
    """Run the command line front end and return the exit status.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    out = _Output(args.format, _use_color(args))
    _logger.debug("running %s with %s", args.command, vars(args))
    try:
        return COMMANDS[args.command](args, out)
    except LatticeCrossException as e:
        print(f"{PROG}: error: {e.code}: {e}", file=sys.stderr)
        return exit_status(e)
    except (ValueError, IndexError, OSError, json.JSONDecodeError) as e:
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return EXIT_USAGE

if __name__ == "__main__":
    sys.exit(main())
