"""Input-format parsers, one per source token."""

from __future__ import annotations

from typing import Callable

from .. import formats
from ..model import Graph
from .jsonld import parse_jsonld
from .microdata import parse_microdata
from .ntriples import parse_ntriples
from .rdfa import parse_rdfa
from .rdfjson import parse_rdfjson
from .rdfxml import parse_rdfxml
from .turtle import DEFAULT_BASE, parse_turtle_n3

PARSERS: dict[str, Callable[[str, str | None], Graph]] = {
    formats.NT: parse_ntriples,
    formats.N3: parse_turtle_n3,
    formats.XML: parse_rdfxml,
    formats.RDF_JSON: parse_rdfjson,
    formats.JSON_LD: parse_jsonld,
    formats.RDFA: parse_rdfa,
    formats.MICRODATA: parse_microdata,
}

__all__ = [
    "DEFAULT_BASE", "PARSERS",
    "parse_jsonld", "parse_microdata", "parse_ntriples", "parse_rdfa",
    "parse_rdfjson", "parse_rdfxml", "parse_turtle_n3",
]
