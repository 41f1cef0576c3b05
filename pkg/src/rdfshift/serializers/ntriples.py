"""Deterministic N-Triples output: canonical blank labels, sorted lines."""

from __future__ import annotations

from ..model import BlankNode, Graph, IRI, Literal, Term, canonical_blank_labels
from ..text import escape_string


def format_term(term: Term) -> str:
    if isinstance(term, IRI):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    if isinstance(term, Literal):
        body = f'"{escape_string(term.lexical)}"'
        if term.language:
            return f"{body}@{term.language}"
        if term.datatype:
            return f"{body}^^<{term.datatype}>"
        return body
    raise TypeError(f"not a term: {term!r}")


def serialize_ntriples(graph: Graph, resolver=None) -> str:
    canonical = canonical_blank_labels(graph)
    lines = sorted(
        f"{format_term(t.subject)} {format_term(t.predicate)} {format_term(t.object)} ."
        for t in canonical
    )
    return "".join(line + "\n" for line in lines)
