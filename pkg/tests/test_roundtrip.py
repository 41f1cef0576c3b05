"""Round-trip and composition properties over seeded random graphs.

The acceptance suite runs the full-size versions; these keep a smaller
budget so the default test run stays fast while covering every format.
"""

from __future__ import annotations

import pytest

from rdfshift import formats
from rdfshift.convert import convert_text
from rdfshift.model import Graph, graph_isomorphic
from rdfshift.parsers import PARSERS
from rdfshift.serializers import SERIALIZERS
from rdfshift.testing import erase_literal_annotations, random_graphs

LOSSLESS = (
    formats.NT, formats.N3, formats.XML, formats.PRETTY_XML,
    formats.RDF_JSON, formats.RDF_JSON_PRETTY, formats.JSON_LD, formats.RDFA,
)

BASE = "http://roundtrip.example/"


def roundtrip(graph: Graph, token: str) -> Graph:
    text = SERIALIZERS[token](graph, None)
    parser = PARSERS[formats.BASE_FORMAT.get(token, token)]
    return parser(text, BASE)


@pytest.mark.parametrize("token", LOSSLESS)
def test_lossless_roundtrip(token):
    for i, g in enumerate(random_graphs(seed=1234, count=40)):
        back = roundtrip(g, token)
        assert graph_isomorphic(back, g), (
            f"graph {i} failed {token} round-trip:\n{SERIALIZERS[token](g, None)}"
        )


def test_microdata_roundtrip_on_erased_projection():
    for i, g in enumerate(random_graphs(seed=4321, count=40)):
        back = roundtrip(g, formats.MICRODATA)
        projected = erase_literal_annotations(g)
        assert graph_isomorphic(back, projected), (
            f"graph {i} failed microdata round-trip:\n"
            f"{SERIALIZERS[formats.MICRODATA](g, None)}"
        )


def test_composition_matches_direct():
    import random
    rng = random.Random(2718)
    graphs = random_graphs(seed=42, count=10, max_triples=12)
    for _ in range(10):
        f1, f2, f3 = (rng.choice(LOSSLESS) for _ in range(3))
        for g in graphs:
            doc = SERIALIZERS[f1](g, None)
            src1 = formats.BASE_FORMAT.get(f1, f1)
            src2 = formats.BASE_FORMAT.get(f2, f2)
            via = convert_text(
                convert_text(doc, src1, f2, base=BASE), src2, f3, base=BASE
            )
            direct = convert_text(doc, src1, f3, base=BASE)
            assert graph_isomorphic(
                PARSERS[formats.BASE_FORMAT.get(f3, f3)](via, BASE),
                PARSERS[formats.BASE_FORMAT.get(f3, f3)](direct, BASE),
            ), f"chain {f1}->{f2}->{f3} diverged"


def test_empty_graph_roundtrips_where_parseable():
    empty = Graph()
    for token in LOSSLESS + (formats.MICRODATA,):
        text = SERIALIZERS[token](empty, None)
        parser = PARSERS[formats.BASE_FORMAT.get(token, token)]
        if text.strip() or token in (formats.RDF_JSON, formats.RDF_JSON_PRETTY,
                                     formats.JSON_LD, formats.XML, formats.PRETTY_XML,
                                     formats.RDFA):
            assert len(parser(text, BASE)) == 0
