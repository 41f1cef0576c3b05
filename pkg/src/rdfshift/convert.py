"""The conversion pipeline shared by the HTTP service and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

from . import formats
from .detect import detect_format
from .errors import UnknownFormatError
from .highlight import highlight
from .model import Graph
from .parsers import PARSERS
from .prefixes import PrefixResolver
from .serializers import SERIALIZERS


@dataclass(frozen=True)
class ConversionRequest:
    """One conversion job: where the bytes come from and what they become."""

    source: str                  # source token, possibly "detect"
    target: str                  # target token, never "detect"
    render: str = "raw"          # raw | html
    uri: str | None = None       # remote payload
    content: str | None = None   # inline payload


def check_source(token: str) -> None:
    if not formats.is_source_format(token):
        hint = ""
        if formats.is_target_format(token):
            hint = " (it is accepted as a target only)"
        raise UnknownFormatError(f"unknown source format {token!r}{hint}")


def check_target(token: str) -> None:
    if token == formats.DETECT:
        raise UnknownFormatError("'detect' cannot be used as a target format")
    if not formats.is_target_format(token):
        raise UnknownFormatError(f"unknown target format {token!r}")


def decode_payload(data: bytes) -> str:
    """UTF-8 with an optional BOM; other encodings are out of scope."""
    return data.decode("utf-8-sig")


def resolve_source(source: str, content: str, media_type: str | None) -> str:
    if source == formats.DETECT:
        return detect_format(media_type, content)
    return source


def parse(content: str, source: str, base: str | None = None) -> Graph:
    check_source(source)
    if source == formats.DETECT:
        raise UnknownFormatError("source must be resolved before parsing")
    return PARSERS[source](content, base)


def serialize(graph: Graph, target: str, resolver: PrefixResolver | None = None) -> str:
    check_target(target)
    return SERIALIZERS[target](graph, resolver)


def convert_text(content: str, source: str, target: str, *,
                 base: str | None = None, media_type: str | None = None,
                 resolver: PrefixResolver | None = None, render: str = "raw") -> str:
    """Parse ``content`` and serialize it; optionally highlight for HTML."""
    check_source(source)
    check_target(target)
    resolved = resolve_source(source, content, media_type)
    graph = parse(content, resolved, base)
    output = serialize(graph, target, resolver)
    if render == "html":
        return highlight(output, target)
    return output
