"""RDF/XML parser: striped node/property elements.

Supported: rdf:Description and typed-node elements, rdf:about / rdf:ID /
rdf:nodeID / rdf:resource, property elements with text, resource or nested
node values, property attributes, xml:lang and xml:base inheritance,
rdf:datatype, rdf:parseType="Resource" and "Collection".
rdf:parseType="Literal" and reification via rdf:ID on property elements
are outside the subset and rejected.
"""

from __future__ import annotations

from urllib.parse import urljoin

from ..errors import ParseError, UnsupportedFeatureError
from ..model import (
    RDF_FIRST, RDF_NIL, RDF_NS, RDF_REST, RDF_TYPE,
    BlankNodeAllocator, Graph, IRI, Literal, Term, Triple, is_absolute_iri,
)
from .turtle import DEFAULT_BASE
from .xmltree import XmlElement, parse_xml

_XML_NS = "http://www.w3.org/XML/1998/namespace"

# rdf-namespace attributes that steer the syntax rather than assert triples
_SYNTAX_ATTRS = {"about", "ID", "nodeID", "resource", "datatype", "parseType"}
_OLD_TERMS = {"aboutEach", "aboutEachPrefix", "bagID"}


class _RdfXmlParser:
    def __init__(self, base: str | None):
        self.graph = Graph()
        self.blanks = BlankNodeAllocator()
        self.base = base or DEFAULT_BASE

    def error(self, message: str, el: XmlElement, *, unsupported: bool = False):
        cls = UnsupportedFeatureError if unsupported else ParseError
        raise cls(message, format="xml", line=el.line, column=el.column)

    def resolve(self, iri: str, base: str) -> str:
        if is_absolute_iri(iri):
            return iri
        return urljoin(base, iri)

    def run(self, root: XmlElement) -> Graph:
        if root.name.namespace == RDF_NS and root.name.local == "RDF":
            base, lang = self._context(root, self.base, None)
            for child in root.children:
                self.node_element(child, base, lang)
        else:
            self.node_element(root, self.base, None)
        return self.graph

    def _context(self, el: XmlElement, base: str, lang: str | None) -> tuple[str, str | None]:
        xml_base = el.attr(_XML_NS, "base")
        if xml_base is not None:
            base = self.resolve(xml_base, base)
        xml_lang = el.attr(_XML_NS, "lang")
        if xml_lang is not None:
            lang = xml_lang or None
        return base, lang

    def node_element(self, el: XmlElement, base: str, lang: str | None) -> Term:
        base, lang = self._context(el, base, lang)
        about = el.attr(RDF_NS, "about")
        node_id = el.attr(RDF_NS, "nodeID")
        rdf_id = el.attr(RDF_NS, "ID")
        if sum(x is not None for x in (about, node_id, rdf_id)) > 1:
            self.error("rdf:about, rdf:ID and rdf:nodeID are mutually exclusive", el)
        if about is not None:
            subject: Term = IRI(self.resolve(about, base))
        elif rdf_id is not None:
            subject = IRI(self.resolve("#" + rdf_id, base))
        elif node_id is not None:
            subject = self.blanks.for_label(node_id)
        else:
            subject = self.blanks.fresh()

        name = el.name
        if not (name.namespace == RDF_NS and name.local == "Description"):
            if name.namespace is None:
                self.error(f"node element <{name.local}> has no namespace", el)
            self.graph.add(Triple(subject, IRI(RDF_TYPE), IRI(name.namespace + name.local)))

        for (ns, local), value in sorted(el.attrs.items(), key=repr):
            if ns == _XML_NS or (ns is None and local == "xmlns"):
                continue
            if ns == RDF_NS:
                if local in _SYNTAX_ATTRS or local in ("RDF", "li"):
                    continue
                if local in _OLD_TERMS:
                    self.error(f"obsolete rdf:{local} is not supported", el, unsupported=True)
                if local == "type":
                    self.graph.add(Triple(subject, IRI(RDF_TYPE), IRI(self.resolve(value, base))))
                    continue
                self.graph.add(Triple(subject, IRI(RDF_NS + local), Literal(value, language=lang)))
                continue
            if ns is None:
                self.error(f"attribute {local!r} on node element has no namespace", el)
            self.graph.add(Triple(subject, IRI(ns + local), Literal(value, language=lang)))

        for child in el.children:
            self.property_element(child, subject, base, lang)
        return subject

    def property_element(self, el: XmlElement, subject: Term, base: str, lang: str | None):
        base, lang = self._context(el, base, lang)
        name = el.name
        if name.namespace is None:
            self.error(f"property element <{name.local}> has no namespace", el)
        if name.namespace == RDF_NS and name.local == "li":
            self.error("rdf:li container membership is not supported", el, unsupported=True)
        predicate = IRI(name.namespace + name.local)

        if el.attr(RDF_NS, "ID") is not None:
            self.error("reification via rdf:ID on property elements is not supported",
                       el, unsupported=True)

        parse_type = el.attr(RDF_NS, "parseType")
        if parse_type == "Literal":
            self.error('rdf:parseType="Literal" (XML literals) is not supported',
                       el, unsupported=True)
        if parse_type == "Resource":
            node = self.blanks.fresh()
            self.graph.add(Triple(subject, predicate, node))
            for child in el.children:
                self.property_element(child, node, base, lang)
            return
        if parse_type == "Collection":
            items = [self.node_element(child, base, lang) for child in el.children]
            self.graph.add(Triple(subject, predicate, self._collection(items)))
            return
        if parse_type is not None:
            self.error(f"unknown rdf:parseType {parse_type!r}", el)

        resource = el.attr(RDF_NS, "resource")
        node_id = el.attr(RDF_NS, "nodeID")
        datatype = el.attr(RDF_NS, "datatype")

        extra_attrs = {
            (ns, local): v for (ns, local), v in el.attrs.items()
            if not (ns == _XML_NS or (ns is None and local == "xmlns")
                    or (ns == RDF_NS and local in _SYNTAX_ATTRS))
        }

        if resource is not None or node_id is not None:
            if resource is not None and node_id is not None:
                self.error("rdf:resource and rdf:nodeID are mutually exclusive", el)
            if el.children or el.text.strip():
                self.error("property element with rdf:resource cannot have content", el)
            obj: Term = (
                IRI(self.resolve(resource, base)) if resource is not None
                else self.blanks.for_label(node_id)
            )
            self.graph.add(Triple(subject, predicate, obj))
            for (ns, local), value in sorted(extra_attrs.items(), key=repr):
                if ns == RDF_NS and local == "type":
                    self.graph.add(Triple(obj, IRI(RDF_TYPE), IRI(self.resolve(value, base))))
                else:
                    self.graph.add(Triple(obj, IRI((ns or "") + local), Literal(value, language=lang)))
            return

        if el.children:
            if el.text.strip():
                self.error("property element mixes text and child elements", el)
            if len(el.children) != 1:
                self.error("property element must contain exactly one node element", el)
            if extra_attrs:
                self.error("property element with a node child cannot carry attributes", el)
            obj = self.node_element(el.children[0], base, lang)
            self.graph.add(Triple(subject, predicate, obj))
            return

        if extra_attrs:
            # empty property element whose attributes describe a fresh node
            node = self.blanks.fresh()
            self.graph.add(Triple(subject, predicate, node))
            for (ns, local), value in sorted(extra_attrs.items(), key=repr):
                if ns == RDF_NS and local == "type":
                    self.graph.add(Triple(node, IRI(RDF_TYPE), IRI(self.resolve(value, base))))
                else:
                    self.graph.add(Triple(node, IRI((ns or "") + local), Literal(value, language=lang)))
            return

        text = el.text
        if datatype is not None:
            try:
                obj = Literal(text, datatype=self.resolve(datatype, base))
            except ValueError as exc:
                self.error(str(exc), el)
        else:
            obj = Literal(text, language=lang)
        self.graph.add(Triple(subject, predicate, obj))

    def _collection(self, items: list[Term]) -> Term:
        if not items:
            return IRI(RDF_NIL)
        head = self.blanks.fresh()
        node = head
        for i, item in enumerate(items):
            self.graph.add(Triple(node, IRI(RDF_FIRST), item))
            if i == len(items) - 1:
                self.graph.add(Triple(node, IRI(RDF_REST), IRI(RDF_NIL)))
            else:
                nxt = self.blanks.fresh()
                self.graph.add(Triple(node, IRI(RDF_REST), nxt))
                node = nxt
        return head


def parse_rdfxml(text: str, base: str | None = None) -> Graph:
    root = parse_xml(text, format_token="xml")
    return _RdfXmlParser(base).run(root)
