"""Closed registry of format tokens and their media types.

The token strings are part of the public URI grammar; the media-type table
is the response contract. Reverse lookup collapses pretty variants onto
their base format and breaks the documented ties (text/html -> rdfa,
text/plain -> nt, application/json -> rdf-json).
"""

from __future__ import annotations

from .errors import DetectionFailedError, UnknownFormatError

RDFA = "rdfa"
MICRODATA = "microdata"
XML = "xml"
PRETTY_XML = "pretty-xml"
N3 = "n3"
NT = "nt"
RDF_JSON = "rdf-json"
RDF_JSON_PRETTY = "rdf-json-pretty"
JSON_LD = "json-ld"
DETECT = "detect"

#: formats accepted on the input side (plus the DETECT pseudo-source)
SOURCE_FORMATS = (RDFA, MICRODATA, XML, N3, NT, RDF_JSON, JSON_LD)

#: formats accepted on the output side; includes the two pretty variants
TARGET_FORMATS = (RDFA, MICRODATA, XML, PRETTY_XML, N3, NT, RDF_JSON, RDF_JSON_PRETTY, JSON_LD)

_MEDIA_TYPES = {
    RDFA: "text/html",
    MICRODATA: "text/html",
    XML: "application/rdf+xml",
    PRETTY_XML: "application/rdf+xml",
    N3: "text/n3",
    NT: "text/plain",
    RDF_JSON: "application/json",
    RDF_JSON_PRETTY: "application/json",
    JSON_LD: "application/json",
}

# documented tie-breaks for the many-to-one table rows
_REVERSE = {
    "text/html": RDFA,
    "application/rdf+xml": XML,
    "text/n3": N3,
    "text/plain": NT,
    "application/json": RDF_JSON,
    # aliases real servers emit
    "text/turtle": N3,
    "application/x-turtle": N3,
    "application/turtle": N3,
    "application/ld+json": JSON_LD,
    "application/xhtml+xml": RDFA,
    "application/xml": XML,
    "text/xml": XML,
    "application/n-triples": NT,
}

#: pretty targets mapped back to the format family they share bytes with
BASE_FORMAT = {PRETTY_XML: XML, RDF_JSON_PRETTY: RDF_JSON}


def is_source_format(token: str) -> bool:
    return token in SOURCE_FORMATS or token == DETECT

def is_target_format(token: str) -> bool:
    return token in TARGET_FORMATS


def media_type_for(format: str, render: str = "raw") -> str:
    """Response media type for a target token; html rendering is always text/html."""
    if render not in ("raw", "html"):
        raise UnknownFormatError(f"unknown render mode: {render!r}")
    if format not in _MEDIA_TYPES:
        raise UnknownFormatError(f"unknown format token: {format!r}")
    if render == "html":
        return "text/html"
    return _MEDIA_TYPES[format]


def format_for_media_type(media_type: str) -> str:
    """Map a Content-Type header value to a source format token.

    Parameters (";charset=..." etc.) are ignored. Unmapped types raise
    DetectionFailedError with the offending value in the message.
    """
    essence = media_type.split(";", 1)[0].strip().lower()
    fmt = _REVERSE.get(essence)
    if fmt is None:
        raise DetectionFailedError(
            f"automatic detection failed: no format is registered for media type {media_type!r}"
        )
    return fmt
