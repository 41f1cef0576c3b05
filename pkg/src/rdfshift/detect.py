"""Source-format resolution for the `detect` pseudo-format.

A mapped media type wins outright, except for the two ambiguous families
where sniffing refines the choice: text/html splits into microdata vs
rdfa on the presence of itemscope, and application/json splits into
json-ld vs rdf-json on JSON-LD keywords. Without a usable media type the
content is sniffed with a fixed first-match rule order.
"""

from __future__ import annotations

import re

from . import formats
from .errors import DetectionFailedError

_NT_LINE_RE = re.compile(
    r"^\s*(?:<[^<>\s]+>|_:\S+)\s+<[^<>\s]+>\s+(?:<[^<>\s]+>|_:\S+|\"(?:[^\"\\]|\\.)*\"\S*)\s*\.\s*$"
)
_N3_MARKER_RE = re.compile(r"^\s*(?:@prefix|@base|PREFIX|BASE)\b", re.MULTILINE)
_JSONLD_MARKER_RE = re.compile(r'"@(?:context|id|graph)"')


def _html_family(content: str) -> str:
    return formats.MICRODATA if "itemscope" in content else formats.RDFA


def _json_family(content: str) -> str:
    return formats.JSON_LD if _JSONLD_MARKER_RE.search(content) else formats.RDF_JSON


def detect_format(media_type: str | None, content: str) -> str:
    """Resolve a concrete source format for content submitted as `detect`."""
    if media_type:
        try:
            fmt = formats.format_for_media_type(media_type)
        except DetectionFailedError:
            fmt = None
        if fmt == formats.RDFA:
            return _html_family(content)
        if fmt == formats.RDF_JSON:
            return _json_family(content)
        if fmt is not None:
            return fmt

    body = content.lstrip("﻿ \t\r\n")
    if body.startswith("<?xml") or body.startswith("<rdf:RDF"):
        return formats.XML
    # an N-Triples line also starts with '<'; check it before the generic markup rule
    for line in content.splitlines():
        if line.strip() and not line.lstrip().startswith("#"):
            if _NT_LINE_RE.match(line):
                return formats.NT
            break
    if body.startswith("<"):
        return _html_family(content)
    if _N3_MARKER_RE.search(content):
        return formats.N3
    if body.startswith("{") or body.startswith("["):
        return _json_family(content)
    raise DetectionFailedError(
        "automatic detection of the document format failed: "
        "no media type was usable and the content matches no known syntax"
    )
