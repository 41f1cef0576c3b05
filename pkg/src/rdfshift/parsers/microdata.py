"""Microdata extractor mapping itemscope trees to triples.

Subjects come from itemid (or a fresh blank node), itemtype becomes
rdf:type, and non-URL itemprop names resolve against the item type's
vocabulary base. itemid/href values of the form "_:label" round-trip
blank-node identity; wild documents never use them and are unaffected.
Items without a type and with non-URL property names yield no triples
for those properties.
"""

from __future__ import annotations

from urllib.parse import urljoin

from ..model import (
    RDF_TYPE,
    BlankNodeAllocator, Graph, IRI, Literal, Term, Triple, is_absolute_iri,
)
from .htmldom import HtmlElement, parse_html
from .turtle import DEFAULT_BASE

_HREF_TAGS = {"a", "area", "link"}
_SRC_TAGS = {"audio", "embed", "iframe", "img", "source", "track", "video"}


def _vocab_base(itemtype: str) -> str:
    """Vocabulary base of a type IRI: up to the fragment or last path segment."""
    if "#" in itemtype:
        return itemtype[: itemtype.index("#") + 1]
    cut = itemtype.rfind("/")
    if cut > len("https://"):
        return itemtype[: cut + 1]
    return itemtype.rstrip("/") + "/"


class _MicrodataParser:
    def __init__(self, base: str):
        self.graph = Graph()
        self.blanks = BlankNodeAllocator()
        self.base = base

    def resolve_ref(self, value: str) -> Term:
        if value.startswith("_:") and value[2:]:
            return self.blanks.for_label(value[2:])
        return IRI(urljoin(self.base, value)) if not is_absolute_iri(value) else IRI(value)

    def item(self, el: HtmlElement) -> Term:
        itemid = el.get("itemid")
        if itemid:
            subject = self.resolve_ref(itemid.strip())
        else:
            subject = self.blanks.fresh()

        types = [t for t in (el.get("itemtype") or "").split() if is_absolute_iri(t)]
        for t in types:
            self.graph.add(Triple(subject, IRI(RDF_TYPE), IRI(t)))
        vocab = _vocab_base(types[0]) if types else None

        for prop_el in self._property_elements(el):
            names = (prop_el.get("itemprop") or "").split()
            value = self.value_of(prop_el)
            for name in names:
                if is_absolute_iri(name):
                    predicate = IRI(name)
                elif vocab:
                    predicate = IRI(vocab + name)
                else:
                    continue  # untyped item, non-URL property name: no triple
                self.graph.add(Triple(subject, predicate, value))
        return subject

    def _property_elements(self, item_el: HtmlElement):
        """Descendants carrying itemprop, not crossing into nested items."""
        for child in item_el.child_elements():
            if child.has("itemprop"):
                yield child
            if not child.has("itemscope"):
                yield from self._property_elements(child)

    def value_of(self, el: HtmlElement) -> Term:
        if el.has("itemscope"):
            return self.item(el)
        tag = el.tag
        if tag in _HREF_TAGS and el.has("href"):
            return self.resolve_ref(el.get("href") or "")
        if tag in _SRC_TAGS and el.has("src"):
            return self.resolve_ref(el.get("src") or "")
        if tag == "meta":
            return Literal(el.get("content") or "")
        if tag == "time" and el.has("datetime"):
            return Literal(el.get("datetime") or "")
        if tag == "data" and el.has("value"):
            return Literal(el.get("value") or "")
        return Literal(el.text_content())


def parse_microdata(text: str, base: str | None = None) -> Graph:
    base = base or DEFAULT_BASE
    root = parse_html(text, format_token="microdata")
    parser = _MicrodataParser(base)

    def top_level_items(el: HtmlElement):
        for child in el.child_elements():
            if child.has("itemscope") and not child.has("itemprop"):
                yield child
            else:
                yield from top_level_items(child)

    for item_el in top_level_items(root):
        parser.item(item_el)
    return parser.graph
