"""RDF/XML output, standard and concise (typed-node) variants.

Standard emits one rdf:Description per subject. The concise variant
replaces rdf:Description with the subject's first rdf:type (in sorted
order) when that type IRI splits into a legal QName; remaining types stay
as property elements. Predicates that cannot split raise
UnserializableIRIError.
"""

from __future__ import annotations

import re

from ..errors import UnserializableIRIError
from ..model import (
    RDF_NS, RDF_TYPE,
    BlankNode, Graph, IRI, Term, Triple, canonical_blank_labels,
)
from ..prefixes import PrefixResolver
from ..text import split_qname, xml_escape_attr, xml_escape_text
from .common import effective_prefixes, group_by_subject

_NCNAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")


def _qname_or_raise(iri: str) -> tuple[str, str]:
    parts = split_qname(iri)
    if parts is None:
        raise UnserializableIRIError(
            f"IRI cannot be written as an XML qualified name: {iri!r}"
        )
    return parts


def serialize_rdfxml(graph: Graph, resolver: PrefixResolver | None = None,
                     variant: str = "standard") -> str:
    if variant not in ("standard", "pretty"):
        raise ValueError(f"unknown RDF/XML variant: {variant!r}")
    canonical = canonical_blank_labels(graph)
    prefixes = effective_prefixes(canonical, resolver)
    subjects = group_by_subject(canonical)

    # choose the element name for each subject, splitting off absorbed types
    absorbed: dict[Term, IRI] = {}
    if variant == "pretty":
        for subject, triples in subjects:
            types = sorted(
                (t.object for t in triples
                 if t.predicate.value == RDF_TYPE and isinstance(t.object, IRI)),
                key=lambda o: o.value,
            )
            for candidate in types:
                if split_qname(candidate.value):
                    absorbed[subject] = candidate
                    break

    # every namespace that appears as an element or attribute name
    needed: set[str] = {RDF_NS}
    for subject, triples in subjects:
        for t in triples:
            if t.predicate.value == RDF_TYPE and t.object == absorbed.get(subject):
                needed.add(_qname_or_raise(t.object.value)[0])
            else:
                needed.add(_qname_or_raise(t.predicate.value)[0])

    names: dict[str, str] = {RDF_NS: "rdf"}
    taken = {"rdf"}
    generated = 1
    for ns in sorted(needed - {RDF_NS}):
        candidate = prefixes.prefix_for(ns)
        if not candidate or candidate in taken or not _NCNAME_RE.match(candidate):
            while f"ns{generated}" in taken:
                generated += 1
            candidate = f"ns{generated}"
        names[ns] = candidate
        taken.add(candidate)

    def qname(iri: str) -> str:
        ns, local = _qname_or_raise(iri)
        return f"{names[ns]}:{local}"

    def subject_attr(term: Term) -> str:
        if isinstance(term, IRI):
            return f' rdf:about="{xml_escape_attr(term.value)}"'
        return f' rdf:nodeID="{term.label}"'

    out: list[str] = ['<?xml version="1.0" encoding="utf-8"?>']
    decls = "".join(
        f'\n    xmlns:{name}="{xml_escape_attr(ns)}"'
        for ns, name in sorted(names.items(), key=lambda kv: kv[1])
    )
    out.append(f"<rdf:RDF{decls}>")

    for subject, triples in subjects:
        absorbed_type = absorbed.get(subject)
        element = qname(absorbed_type.value) if absorbed_type else "rdf:Description"
        out.append(f"  <{element}{subject_attr(subject)}>")
        absorbed_once = False
        for t in triples:
            if absorbed_type and not absorbed_once and \
                    t.predicate.value == RDF_TYPE and t.object == absorbed_type:
                absorbed_once = True
                continue
            out.append("    " + _property_xml(t, qname))
        out.append(f"  </{element}>")

    out.append("</rdf:RDF>")
    return "\n".join(out) + "\n"


def _property_xml(t: Triple, qname) -> str:
    name = qname(t.predicate.value)
    obj = t.object
    if isinstance(obj, IRI):
        return f'<{name} rdf:resource="{xml_escape_attr(obj.value)}"/>'
    if isinstance(obj, BlankNode):
        return f'<{name} rdf:nodeID="{obj.label}"/>'
    text = xml_escape_text(obj.lexical)
    if obj.language:
        return f'<{name} xml:lang="{obj.language}">{text}</{name}>'
    if obj.datatype:
        return f'<{name} rdf:datatype="{xml_escape_attr(obj.datatype)}">{text}</{name}>'
    return f"<{name}>{text}</{name}>"
