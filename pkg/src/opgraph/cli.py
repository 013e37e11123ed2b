"""``opgraph`` command line.

Exit codes: 0 success, 1 parse failure in ``--strict`` mode, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .document import compile_text, export_json
from .export import export_csv, export_dot, export_graphml
from .lexicon import LexiconError, default_lexicon, load_lexicon
from .text_pipeline import ParseError

log = logging.getLogger("opgraph")

FORMATS = ("json", "dot", "graphml", "csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opgraph",
                                     description="Compile operation descriptions into graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    ext = sub.add_parser("extract", help="extract elements and relations from a text")
    ext.add_argument("input", help="UTF-8 text file, or - for standard input")
    ext.add_argument("--format", choices=FORMATS, default="json")
    ext.add_argument("--out", help="output file (directory for csv); default stdout")
    ext.add_argument("--strict", action="store_true", help="fail on the first unparseable sentence")
    ext.add_argument("--normalize-case", action="store_true",
                     help="merge elements whose surfaces differ only by case")
    ext.add_argument("--lexicon", help="extra lexicon file, merged with the built-in one")

    sub.add_parser("version", help="print the version")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def run(args: argparse.Namespace) -> int:
    if args.command == "version":
        print(f"opgraph {__version__}")
        return 0

    if args.format == "csv" and not args.out:
        print("opgraph: --format csv requires --out DIRECTORY", file=sys.stderr)
        return 2
    try:
        lexicon = load_lexicon(args.lexicon) if args.lexicon else default_lexicon()
        text = _read_input(args.input)
    except FileNotFoundError as err:
        print(f"opgraph: no such file: {err.filename}", file=sys.stderr)
        return 2
    except (OSError, UnicodeDecodeError, LexiconError) as err:
        print(f"opgraph: {err}", file=sys.stderr)
        return 2

    try:
        doc = compile_text(text, lexicon, strict=args.strict,
                           normalize_case=args.normalize_case)
    except ParseError as err:
        print(f"opgraph: ParseError: {err}", file=sys.stderr)
        return 1
    for diag in doc.diagnostics:
        if diag.code == "ParseError":
            log.warning("%s: %s", diag.subject, diag.message)

    try:
        if args.format == "csv":
            outdir = Path(args.out)
            outdir.mkdir(parents=True, exist_ok=True)
            elements, relations = export_csv(doc)
            (outdir / "elements.csv").write_text(elements, encoding="utf-8", newline="")
            (outdir / "relations.csv").write_text(relations, encoding="utf-8", newline="")
            return 0
        rendered = {
            "json": lambda: export_json(doc),
            "dot": lambda: export_dot(doc.graph),
            "graphml": lambda: export_graphml(doc.graph),
        }[args.format]()
        if args.out:
            Path(args.out).write_text(rendered, encoding="utf-8")
        else:
            sys.stdout.write(rendered)
    except OSError as err:
        print(f"opgraph: {err}", file=sys.stderr)
        return 2
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="opgraph: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
