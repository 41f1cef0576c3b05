"""Line-oriented N-Triples parser."""

from __future__ import annotations

import re

from ..errors import ParseError
from ..model import BlankNodeAllocator, Graph, IRI, Literal, Triple
from ..text import decode_iri_escapes, unescape_string

_IRI = r"<([^<>\s\"{}|^`]*)>"
_BLANK = r"_:([A-Za-z0-9_][A-Za-z0-9_.\-]*)"
_STRING = r'"((?:[^"\\\n\r]|\\.)*)"'
_LANG = r"@([A-Za-z]{1,8}(?:-[A-Za-z0-9]{1,8})*)"

_LINE_RE = re.compile(
    rf"^\s*(?:{_IRI}|{_BLANK})"          # 1: subj iri, 2: subj blank
    rf"\s+{_IRI}"                        # 3: predicate
    rf"\s+(?:{_IRI}|{_BLANK}|{_STRING}(?:{_LANG}|\^\^{_IRI})?)"  # 4-8: object
    rf"\s*\.\s*(?:#.*)?$"
)

_COMMENT_RE = re.compile(r"^\s*(#.*)?$")


def parse_ntriples(text: str, base: str | None = None) -> Graph:
    """One triple per non-blank, non-comment line; errors carry the line number."""
    graph = Graph()
    blanks = BlankNodeAllocator()
    for lineno, line in enumerate(text.split("\n"), start=1):
        if _COMMENT_RE.match(line):
            continue
        m = _LINE_RE.match(line)
        if m is None:
            raise ParseError(
                f"malformed N-Triples statement: {line.strip()[:80]!r}",
                format="nt", line=lineno, column=1,
            )
        try:
            subject = (
                IRI(decode_iri_escapes(m.group(1))) if m.group(1) is not None
                else blanks.for_label(m.group(2))
            )
            predicate = IRI(decode_iri_escapes(m.group(3)))
            if m.group(4) is not None:
                obj = IRI(decode_iri_escapes(m.group(4)))
            elif m.group(5) is not None:
                obj = blanks.for_label(m.group(5))
            else:
                lexical = unescape_string(m.group(6))
                lang = m.group(7)
                datatype = decode_iri_escapes(m.group(8)) if m.group(8) else None
                obj = Literal(lexical, datatype=datatype, language=lang)
            graph.add(Triple(subject, predicate, obj))
        except ValueError as exc:
            raise ParseError(str(exc), format="nt", line=lineno, column=1) from exc
    return graph
