"""Command-line converter over the same library core as the HTTP service.

    rdfshift --from n3 --to nt example.n3 > example.nt
    cat doc.ttl | rdfshift --from detect --to json-ld -
    rdfshift --from xml --to n3 --html http://xmlns.com/foaf/spec/index.rdf

Exit codes: 0 success, 1 parse/conversion error, 2 fetch error, 3 usage.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import formats
from .config import FetchConfig
from .convert import check_source, check_target, decode_payload, resolve_source
from .errors import (
    DetectionFailedError, FetchError, ParseError, RdfShiftError, UnknownFormatError,
)
from .fetch import fetch_document
from .highlight import highlight, render_page
from .parsers import DEFAULT_BASE, PARSERS
from .serializers import SERIALIZERS

USAGE_EXIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rdfshift",
        description="Convert RDF between serialization formats.",
    )
    parser.add_argument("--from", dest="source", required=True,
                        metavar="FORMAT", help="source format token, or 'detect'")
    parser.add_argument("--to", dest="target", required=True,
                        metavar="FORMAT", help="target format token")
    parser.add_argument("--html", action="store_true",
                        help="emit syntax-highlighted HTML instead of raw output")
    parser.add_argument("--base", metavar="IRI",
                        help="base IRI for resolving relative references")
    parser.add_argument("input", nargs="?", default="-",
                        help="file path, remote URI, or '-' for stdin (default)")
    return parser


def _read_input(arg: str, source: str, base: str | None):
    """Returns (text, base, media_type)."""
    if arg == "-":
        data = sys.stdin.buffer.read()
        return decode_payload(data), base or DEFAULT_BASE, None
    if os.path.exists(arg):
        with open(arg, "rb") as fh:
            data = fh.read()
        default_base = "file://" + os.getcwd().rstrip("/") + "/"
        return decode_payload(data), base or default_base, None
    result = fetch_document(arg, source, FetchConfig())
    return decode_payload(result.content), base or result.final_uri, result.media_type


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        check_source(args.source)
        check_target(args.target)
    except UnknownFormatError as exc:
        print(f"rdfshift: {exc}", file=sys.stderr)
        return USAGE_EXIT

    try:
        text, base, media_type = _read_input(args.input, args.source, args.base)
    except FetchError as exc:
        print(f"rdfshift: fetch failed: {exc.message}", file=sys.stderr)
        return 2
    except UnicodeDecodeError as exc:
        print(f"rdfshift: input is not valid UTF-8: {exc}", file=sys.stderr)
        return 1

    try:
        resolved = resolve_source(args.source, text, media_type)
        graph = PARSERS[resolved](text, base)
        output = SERIALIZERS[args.target](graph, None)
    except DetectionFailedError as exc:
        print(f"rdfshift: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"rdfshift: {exc}", file=sys.stderr)
        return 1
    except RdfShiftError as exc:
        print(f"rdfshift: {exc}", file=sys.stderr)
        return 1

    if args.html:
        output = render_page(highlight(output, args.target),
                             title=f"{args.source} to {args.target}")
    sys.stdout.buffer.write(output.encode("utf-8"))
    sys.stdout.buffer.flush()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
