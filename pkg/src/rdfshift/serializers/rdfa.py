"""RDFa snippet output: a self-contained div that reparses to the graph.

property/rel values stay full IRIs; the prefix attribute on the outer div
carries the compactions for human readers and other processors. Blank
nodes are written as _:label in about/resource, which our extractor (and
RDFa's CURIE syntax) maps back to blank nodes.
"""

from __future__ import annotations

from ..model import (
    RDF_TYPE, BlankNode, Graph, IRI, Literal, Term, canonical_blank_labels,
)
from ..prefixes import PrefixResolver
from ..text import xml_escape_attr
from .common import effective_prefixes, group_by_subject


def _ref(term: Term) -> str:
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    return term.value


def serialize_rdfa_snippet(graph: Graph, resolver: PrefixResolver | None = None) -> str:
    canonical = canonical_blank_labels(graph)
    if len(canonical) == 0:
        return "<div></div>\n"
    prefixes = effective_prefixes(canonical, resolver)
    bindings = " ".join(f"{name}: {ns}" for name, ns in prefixes.items() if name)
    prefix_attr = f' prefix="{xml_escape_attr(bindings)}"' if bindings else ""

    out = [f"<div{prefix_attr}>"]
    for subject, triples in group_by_subject(canonical):
        types = sorted(
            t.object.value for t in triples
            if t.predicate.value == RDF_TYPE and isinstance(t.object, IRI)
        )
        typeof_attr = f' typeof="{xml_escape_attr(" ".join(types))}"' if types else ""
        out.append(f'  <div about="{xml_escape_attr(_ref(subject))}"{typeof_attr}>')
        for t in triples:
            if t.predicate.value == RDF_TYPE and isinstance(t.object, IRI):
                continue
            pred = xml_escape_attr(t.predicate.value)
            obj = t.object
            if isinstance(obj, Literal):
                extra = ""
                if obj.language:
                    extra = f' lang="{xml_escape_attr(obj.language)}"'
                elif obj.datatype:
                    extra = f' datatype="{xml_escape_attr(obj.datatype)}"'
                out.append(
                    f'    <span property="{pred}" content="{xml_escape_attr(obj.lexical)}"'
                    f"{extra}></span>"
                )
            else:
                out.append(
                    f'    <span rel="{pred}" resource="{xml_escape_attr(_ref(obj))}"></span>'
                )
        out.append("  </div>")
    out.append("</div>")
    return "\n".join(out) + "\n"
