"""Turtle output: prefix block, compacted IRIs, subject grouping."""

from __future__ import annotations

from ..model import (
    RDF_TYPE, BlankNode, Graph, IRI, Term, canonical_blank_labels,
)
from ..prefixes import PrefixResolver, compact_iri
from ..text import escape_string
from .common import effective_prefixes, group_by_subject


def serialize_turtle(graph: Graph, resolver: PrefixResolver | None = None) -> str:
    canonical = canonical_blank_labels(graph)
    if len(canonical) == 0:
        return ""
    prefixes = effective_prefixes(canonical, resolver)

    used: set[str] = set()

    def iri_text(iri: str) -> str:
        compact = compact_iri(iri, prefixes)
        if compact is not None:
            used.add(compact.partition(":")[0])
            return compact
        return f"<{iri}>"

    def term_text(term: Term) -> str:
        if isinstance(term, IRI):
            return iri_text(term.value)
        if isinstance(term, BlankNode):
            return f"_:{term.label}"
        body = f'"{escape_string(term.lexical)}"'
        if term.language:
            return f"{body}@{term.language}"
        if term.datatype:
            return f"{body}^^{iri_text(term.datatype)}"
        return body

    blocks: list[str] = []
    for subject, triples in group_by_subject(canonical):
        by_predicate: dict[Term, list[Term]] = {}
        order: list[Term] = []
        for t in triples:
            if t.predicate not in by_predicate:
                by_predicate[t.predicate] = []
                order.append(t.predicate)
            by_predicate[t.predicate].append(t.object)
        # rdf:type leads, as `a`
        order.sort(key=lambda p: (p.value != RDF_TYPE, p.value))
        lines = []
        for i, predicate in enumerate(order):
            pred_text = "a" if predicate.value == RDF_TYPE else term_text(predicate)
            objects = ", ".join(term_text(o) for o in by_predicate[predicate])
            lead = term_text(subject) if i == 0 else "   "
            tail = " ;" if i < len(order) - 1 else " ."
            lines.append(f"{lead} {pred_text} {objects}{tail}")
        blocks.append("\n".join(lines))

    header = "".join(
        f"@prefix {prefix}: <{ns}> .\n"
        for prefix, ns in prefixes.items()
        if prefix in used
    )
    body = "\n\n".join(blocks) + "\n"
    return header + "\n" + body if header else body
