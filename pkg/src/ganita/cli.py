"""Command-line front end.

Exit status: 0 success, 1 usage (bad arguments, unreadable file), 2 parse
error in an input document, 3 domain error from a procedure.
"""

import argparse
import json
import sys

from . import bija, geometry, notation, proportion, satra
from .core import ExactScalar, Length, as_rational, convert, decimal_str, format_exact, parse_length
from .errors import DomainError, ParseError
from .scene import RECIPES, build_recipe
from .svg import render_svg

EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser():
    parser = _Parser(prog="ganita", description="Reconstructed procedures of early Indian mathematics.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("construct", help="rope-and-peg construction to JSON/SVG")
    p.add_argument("--recipe", required=True, choices=sorted(RECIPES))
    p.add_argument("--out", help="write the scene document here (default: stdout)")
    p.add_argument("--svg", help="also write an SVG drawing")

    p = sub.add_parser("solve", help="solve an equation in yāva/yā/rū notation")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="two-row notation file")
    src.add_argument(
        "--coeffs",
        nargs=6,
        metavar=("YAVA1", "YA1", "RU1", "YAVA2", "YA2", "RU2"),
        help="coefficients of the two sides",
    )
    p.add_argument("--trace", action="store_true", help="print the completing-the-square steps")
    p.add_argument("--lenient", action="store_true", help="accept regional negative marks")
    p.add_argument("--json", action="store_true", help="print the trace as JSON")

    p = sub.add_parser("calendar", help="run the day-count calendar")
    p.add_argument("--days", type=int, required=True)
    p.add_argument("--config", help="key=value file")

    p = sub.add_parser("partition", help="equal splittings of a heap of bricks")
    p.add_argument("--total", type=int, required=True)
    p.add_argument("--sb-filter", action="store_true", help="only bodies of thirty or more")

    p = sub.add_parser("proportion", help="rule of three (\"a:b::x:?\") or chained stages (\"a:b\" ... --iccha x)")
    p.add_argument("problem", nargs="+")
    p.add_argument("--iccha", help="quantity asked about, for chained stages")

    p = sub.add_parser("approx-diagonal", help="diagonal of the unit square by pieces of cord")
    p.add_argument("--steps", type=int, default=3)
    p.add_argument("--unit", help='side length, e.g. "35 ft"')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("identity", help="square of a sum split into squares and rectangles")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    return parser


def _rat(text):
    try:
        return as_rational(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------


def cmd_construct(args, out):
    scene = build_recipe(args.recipe)
    doc = scene.to_json()
    text = json.dumps(doc, ensure_ascii=False, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        out.write(text + "\n")
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(doc))
    for f in doc["figures"]:
        print(f"# figure {f['name']}: {f['class']}", file=sys.stderr)


def cmd_solve(args, out):
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            eq = notation.parse(fh.read(), lenient=args.lenient)
    else:
        c = [_rat(v) for v in args.coeffs]
        eq = bija.Equation(bija.Paksha(*c[:3]), bija.Paksha(*c[3:]))
    out.write(f"equation: {eq}\n")
    norm = bija.normalize(eq)
    out.write(f"normalized: {norm}\n")
    roots, trace = bija.solve(eq)
    if args.trace and trace is not None:
        if args.json:
            out.write(json.dumps(trace.to_json(), ensure_ascii=False, indent=2) + "\n")
        else:
            for line in trace.lines():
                out.write(f"  {line}\n")
    for v in roots.values:
        out.write(f"x = {format_exact(v)}\n")


def cmd_calendar(args, out):
    config = satra.load_config(args.config) if args.config else satra.CalendarConfig()
    report = satra.simulate(config, args.days)
    out.write(report.dumps() + "\n")


def cmd_partition(args, out):
    for k, size in satra.equal_partitions_of(args.total, sb_filter=args.sb_filter):
        out.write(f"({k}, {size})\n")


def cmd_proportion(args, out):
    if len(args.problem) == 1 and "::" in args.problem[0]:
        if args.iccha is not None:
            raise UsageError("--iccha is only for chained stages")
        result = proportion.rule_of_three(proportion.parse_rule_of_three(args.problem[0]))
    else:
        if args.iccha is None:
            raise UsageError("chained stages need --iccha")
        stages = [proportion.parse_stage(s) for s in args.problem]
        result = proportion.compound_proportion(proportion.CompoundProportion(stages, _rat(args.iccha)))
    out.write(f"{format_exact(result)}\n")


def cmd_approx_diagonal(args, out):
    if args.steps < 1:
        raise DomainError("max_steps must be at least 1")
    trace = geometry.sulba_diagonal_refinement(args.steps)
    if args.json:
        out.write(json.dumps(trace.to_json(), ensure_ascii=False, indent=2) + "\n")
        return
    for s in trace.steps:
        sign = "+" if s.sign > 0 else "-"
        out.write(f"{sign} {s.term}  (1/{s.multiplier} of the previous piece)\n")
    out.write(f"{trace.expression()} = {format_exact(trace.value)}\n")
    out.write(f"residual: ({trace.value})² - 2 = {trace.residual()}\n")
    if args.unit:
        unit = parse_length(args.unit)
        angula = None
        for c in geometry.scale_trace_to_unit(trace, unit):
            line = f"{c.term} of {unit}: {format_exact(c.length.magnitude)} {unit.unit}"
            if c.inches is not None:
                line += f" = {format_exact(c.inches.magnitude)} inch"
            out.write(line + "\n")
            angula = c
        if angula is not None and angula.length.convertible:
            one = convert(Length(1, "aṅgula"), "inch").magnitude
            more = angula.inches.magnitude > one
            out.write(
                f"last correction {'exceeds' if more else 'is within'} one aṅgula ({one} inch)\n"
            )


def cmd_identity(args, out):
    x, y = _rat(args.x), _rat(args.y)
    parts = geometry.decompose_square(x, y)
    for label, area in parts:
        out.write(f"{label}: {format_exact(area)}\n")
    total = sum(a for _, a in parts)
    out.write(f"sum: {format_exact(total)} = ({x} + {y})²\n")
    product = bija.product_via_squares(x, y)
    out.write(
        f"product: ((X+Y)² - (X² + Y²))/2 = {format_exact(product)}; X·Y = {x * y}; "
        f"{'agree' if product == x * y else 'DISAGREE'}\n"
    )


COMMANDS = {
    "construct": cmd_construct,
    "solve": cmd_solve,
    "calendar": cmd_calendar,
    "partition": cmd_partition,
    "proportion": cmd_proportion,
    "approx-diagonal": cmd_approx_diagonal,
    "identity": cmd_identity,
}


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"ganita: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"ganita: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"ganita: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SystemExit as exc:  # --help
        return exc.code or 0
    return 0


def main():
    sys.exit(run())
