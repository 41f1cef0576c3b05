"""Seeded random graph generation for round-trip and composition testing.

IRIs draw from a three-namespace pool, graphs carry at most four blank
nodes, and literals mix roughly 50/25/25 between plain, language-tagged
and datatyped. Lexical forms avoid carriage returns and raw control
characters, which XML cannot transport verbatim.
"""

from __future__ import annotations

import random

from .model import (
    XSD_INTEGER, XSD_NS,
    BlankNode, Graph, IRI, Literal, PrefixMap, Term, Triple,
)

NAMESPACE_POOL = (
    "http://example.org/a#",
    "http://example.com/vocab/",
    "http://test.example/ns#",
)

_PREFIX_NAMES = ("exa", "voc", "tns")

_LANG_TAGS = ("en", "de", "en-US", "fr")

_DATATYPES = (
    XSD_INTEGER,
    XSD_NS + "date",
    "http://example.org/a#customType",
)

_LEXICAL_ALPHABET = (
    "abcdefghij AB\"\\<>&'\n\tüß€日本語 0123456789_:#.%"
)


def _random_lexical(rng: random.Random) -> str:
    length = rng.randint(0, 12)
    return "".join(rng.choice(_LEXICAL_ALPHABET) for _ in range(length))


class GraphGenerator:
    """Deterministic for a given seed; graphs cap at ``max_triples``."""

    def __init__(self, seed: int, max_triples: int = 20, max_blanks: int = 4):
        self.rng = random.Random(seed)
        self.max_triples = max_triples
        self.max_blanks = max_blanks

    def iri(self) -> IRI:
        ns = self.rng.choice(NAMESPACE_POOL)
        kind = self.rng.choice(("s", "p", "o", "thing", "item"))
        return IRI(f"{ns}{kind}{self.rng.randint(0, 9)}")

    def predicate(self) -> IRI:
        ns = self.rng.choice(NAMESPACE_POOL)
        return IRI(f"{ns}p{self.rng.randint(0, 9)}")

    def blank(self) -> BlankNode:
        return BlankNode(f"node{self.rng.randint(0, self.max_blanks - 1)}")

    def literal(self) -> Literal:
        lexical = _random_lexical(self.rng)
        roll = self.rng.random()
        if roll < 0.5:
            return Literal(lexical)
        if roll < 0.75:
            return Literal(lexical, language=self.rng.choice(_LANG_TAGS))
        return Literal(lexical, datatype=self.rng.choice(_DATATYPES))

    def subject(self) -> Term:
        return self.blank() if self.rng.random() < 0.3 else self.iri()

    def object(self) -> Term:
        roll = self.rng.random()
        if roll < 0.45:
            return self.literal()
        if roll < 0.7:
            return self.blank()
        return self.iri()

    def graph(self) -> Graph:
        prefixes = PrefixMap()
        for name, ns in zip(_PREFIX_NAMES, NAMESPACE_POOL):
            if self.rng.random() < 0.5:
                prefixes.bind(name, ns)
        graph = Graph(prefixes=prefixes)
        for _ in range(self.rng.randint(0, self.max_triples)):
            graph.add(Triple(self.subject(), self.predicate(), self.object()))
        return graph


def random_graphs(seed: int, count: int, max_triples: int = 20) -> list[Graph]:
    generator = GraphGenerator(seed, max_triples=max_triples)
    return [generator.graph() for _ in range(count)]


def erase_literal_annotations(graph: Graph) -> Graph:
    """Project a graph onto what Microdata can express: bare literals."""
    out = Graph(prefixes=graph.prefixes.copy())
    for t in graph:
        obj = t.object
        if isinstance(obj, Literal) and (obj.language or obj.datatype):
            obj = Literal(obj.lexical)
        out.add(Triple(t.subject, t.predicate, obj))
    return out
