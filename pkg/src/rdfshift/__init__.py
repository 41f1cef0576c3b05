"""rdfshift: bidirectional RDF serialization converter.

Library, CLI and stateless REST service for translating among RDFa,
Microdata, RDF/XML, Notation 3 (Turtle subset), N-Triples, RDF/JSON and
JSON-LD, with content negotiation, syntax-highlighted output and
namespace-prefix resolution.
"""

from .config import __version__
from .convert import ConversionRequest, convert_text, parse, serialize
from .errors import (
    DetectionFailedError, FetchError, InvalidTermError, InvalidTripleError,
    ParseError, RdfShiftError, SerializeError, UnknownFormatError,
    UnserializableIRIError, UnsupportedFeatureError,
)
from .model import (
    BlankNode, Graph, IRI, Literal, PrefixMap, Triple,
    canonical_blank_labels, graph_add, graph_isomorphic,
)

__all__ = [
    "__version__",
    "BlankNode", "ConversionRequest", "Graph", "IRI", "Literal", "PrefixMap", "Triple",
    "canonical_blank_labels", "convert_text", "graph_add", "graph_isomorphic",
    "parse", "serialize",
    "DetectionFailedError", "FetchError", "InvalidTermError", "InvalidTripleError",
    "ParseError", "RdfShiftError", "SerializeError", "UnknownFormatError",
    "UnserializableIRIError", "UnsupportedFeatureError",
]
