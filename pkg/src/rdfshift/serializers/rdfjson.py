"""RDF/JSON output: subject -> predicate -> value-object arrays.

The concise variant compacts subject and predicate keys with the
effective prefix bindings and records the bindings it used under the
reserved top-level "prefixes" key so the document stays self-contained.
"""

from __future__ import annotations

import json

from ..model import BlankNode, Graph, IRI, Term, canonical_blank_labels
from ..prefixes import PrefixResolver, compact_iri
from .common import effective_prefixes, group_by_subject


def _value_object(term: Term) -> dict:
    if isinstance(term, IRI):
        return {"type": "uri", "value": term.value}
    if isinstance(term, BlankNode):
        return {"type": "bnode", "value": f"_:{term.label}"}
    out: dict = {"type": "literal", "value": term.lexical}
    if term.language:
        out["lang"] = term.language
    if term.datatype:
        out["datatype"] = term.datatype
    return out


def serialize_rdfjson(graph: Graph, resolver: PrefixResolver | None = None,
                      variant: str = "standard") -> str:
    if variant not in ("standard", "pretty"):
        raise ValueError(f"unknown RDF/JSON variant: {variant!r}")
    canonical = canonical_blank_labels(graph)
    prefixes = effective_prefixes(canonical, resolver) if variant == "pretty" else None
    used: dict[str, str] = {}

    def key_for(term: Term) -> str:
        if isinstance(term, BlankNode):
            return f"_:{term.label}"
        if prefixes is not None:
            compact = compact_iri(term.value, prefixes)
            if compact is not None:
                name = compact.partition(":")[0]
                used[name] = prefixes.namespace_for(name)
                return compact
        return term.value

    doc: dict = {}
    for subject, triples in group_by_subject(canonical):
        predicates: dict[str, list] = {}
        for t in triples:
            predicates.setdefault(key_for(t.predicate), []).append(_value_object(t.object))
        for values in predicates.values():
            values.sort(key=lambda v: (v["type"], v["value"],
                                       v.get("lang", ""), v.get("datatype", "")))
        doc[key_for(subject)] = predicates
    if used:
        doc["prefixes"] = dict(sorted(used.items()))
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)
