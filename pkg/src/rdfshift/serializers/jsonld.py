"""JSON-LD output: @context from the prefix map, @graph of node objects."""

from __future__ import annotations

import json

from ..model import (
    RDF_TYPE, BlankNode, Graph, IRI, Term, canonical_blank_labels,
)
from ..prefixes import PrefixResolver, compact_iri
from .common import effective_prefixes, group_by_subject


def serialize_jsonld(graph: Graph, resolver: PrefixResolver | None = None) -> str:
    canonical = canonical_blank_labels(graph)
    prefixes = effective_prefixes(canonical, resolver)
    used: dict[str, str] = {}

    def compact_key(iri: str) -> str:
        compact = compact_iri(iri, prefixes)
        if compact is not None and not compact.startswith(":"):
            name = compact.partition(":")[0]
            used[name] = prefixes.namespace_for(name)
            return compact
        return iri

    def ref(term: Term) -> str:
        if isinstance(term, BlankNode):
            return f"_:{term.label}"
        return term.value

    def value_entry(term: Term) -> object:
        if isinstance(term, (IRI, BlankNode)):
            return {"@id": ref(term)}
        if term.language:
            return {"@value": term.lexical, "@language": term.language}
        if term.datatype:
            return {"@value": term.lexical, "@type": term.datatype}
        return term.lexical

    nodes: list[dict] = []
    for subject, triples in group_by_subject(canonical):
        node: dict = {"@id": ref(subject)}
        types = sorted(
            t.object.value for t in triples
            if t.predicate.value == RDF_TYPE and isinstance(t.object, IRI)
        )
        if types:
            node["@type"] = types
        properties: dict[str, list] = {}
        for t in triples:
            if t.predicate.value == RDF_TYPE and isinstance(t.object, IRI):
                continue
            properties.setdefault(compact_key(t.predicate.value), []).append(value_entry(t.object))
        for key in sorted(properties):
            node[key] = sorted(properties[key], key=lambda v: json.dumps(v, sort_keys=True))
        nodes.append(node)

    doc = {"@context": dict(sorted(used.items())), "@graph": nodes}
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)
