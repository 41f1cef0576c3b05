"""Microdata snippet output: one itemscope div per subject.

Microdata cannot express datatypes or language tags, so literal
properties lose both (documented lossy projection). itemprop names are
the full predicate IRIs, which the Microdata mapping uses verbatim.
Blank subjects and blank references are written as itemid/href "_:label"
so node identity survives a round trip.
"""

from __future__ import annotations

from ..model import (
    RDF_TYPE, BlankNode, Graph, IRI, Literal, Term, canonical_blank_labels,
)
from ..prefixes import PrefixResolver
from ..text import xml_escape_attr
from .common import group_by_subject


def _ref(term: Term) -> str:
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    return term.value


def serialize_microdata_snippet(graph: Graph, resolver: PrefixResolver | None = None) -> str:
    canonical = canonical_blank_labels(graph)
    if len(canonical) == 0:
        return ""
    out: list[str] = []
    for subject, triples in group_by_subject(canonical):
        types = sorted(
            t.object.value for t in triples
            if t.predicate.value == RDF_TYPE and isinstance(t.object, IRI)
        )
        attrs = [f'itemid="{xml_escape_attr(_ref(subject))}"']
        if types:
            attrs.append(f'itemtype="{xml_escape_attr(" ".join(types))}"')
        out.append(f"<div itemscope {' '.join(attrs)}>")
        for t in triples:
            if t.predicate.value == RDF_TYPE and isinstance(t.object, IRI):
                continue
            pred = xml_escape_attr(t.predicate.value)
            obj = t.object
            if isinstance(obj, Literal):
                out.append(
                    f'  <meta itemprop="{pred}" content="{xml_escape_attr(obj.lexical)}">'
                )
            else:
                out.append(
                    f'  <link itemprop="{pred}" href="{xml_escape_attr(_ref(obj))}">'
                )
        out.append("</div>")
    return "\n".join(out) + "\n"
