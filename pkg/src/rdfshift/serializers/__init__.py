"""Output-format serializers, one per target token. All deterministic."""

from __future__ import annotations

from functools import partial
from typing import Callable

from .. import formats
from ..model import Graph
from .jsonld import serialize_jsonld
from .microdata import serialize_microdata_snippet
from .ntriples import format_term, serialize_ntriples
from .rdfa import serialize_rdfa_snippet
from .rdfjson import serialize_rdfjson
from .rdfxml import serialize_rdfxml
from .turtle import serialize_turtle

SERIALIZERS: dict[str, Callable] = {
    formats.NT: serialize_ntriples,
    formats.N3: serialize_turtle,
    formats.XML: partial(serialize_rdfxml, variant="standard"),
    formats.PRETTY_XML: partial(serialize_rdfxml, variant="pretty"),
    formats.RDF_JSON: partial(serialize_rdfjson, variant="standard"),
    formats.RDF_JSON_PRETTY: partial(serialize_rdfjson, variant="pretty"),
    formats.JSON_LD: serialize_jsonld,
    formats.RDFA: serialize_rdfa_snippet,
    formats.MICRODATA: serialize_microdata_snippet,
}

__all__ = [
    "SERIALIZERS", "format_term",
    "serialize_jsonld", "serialize_microdata_snippet", "serialize_ntriples",
    "serialize_rdfa_snippet", "serialize_rdfjson", "serialize_rdfxml",
    "serialize_turtle",
]
