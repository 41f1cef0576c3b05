"""Tiny namespace-aware XML tree with source positions, built on expat.

ElementTree drops line numbers once parsing finishes; structure errors in
RDF/XML need them, so this keeps (line, column) per element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.parsers import expat

from ..errors import ParseError

_SEP = "\x1f"


@dataclass
class XmlName:
    namespace: str | None
    local: str

    @property
    def full(self) -> str:
        return (self.namespace or "") + self.local


@dataclass
class XmlElement:
    name: XmlName
    attrs: dict[tuple[str | None, str], str]
    line: int
    column: int
    children: list["XmlElement"] = field(default_factory=list)
    text_parts: list[str] = field(default_factory=list)

    def attr(self, namespace: str | None, local: str) -> str | None:
        return self.attrs.get((namespace, local))

    @property
    def text(self) -> str:
        return "".join(self.text_parts)


def _split(name: str) -> XmlName:
    if _SEP in name:
        ns, local = name.rsplit(_SEP, 1)
        return XmlName(ns, local)
    return XmlName(None, name)


class _Builder:
    def __init__(self, parser: expat.XMLParserType):
        self.parser = parser
        self.root: XmlElement | None = None
        self.stack: list[XmlElement] = []

    def start(self, name: str, attrs: dict[str, str]):
        el = XmlElement(
            name=_split(name),
            attrs={(n.namespace, n.local): v for n, v in ((_split(k), v) for k, v in attrs.items())},
            line=self.parser.CurrentLineNumber,
            column=self.parser.CurrentColumnNumber + 1,
        )
        if self.stack:
            self.stack[-1].children.append(el)
        else:
            self.root = el
        self.stack.append(el)

    def end(self, name: str):
        self.stack.pop()

    def data(self, data: str):
        if self.stack:
            self.stack[-1].text_parts.append(data)


def parse_xml(text: str, format_token: str = "xml") -> XmlElement:
    parser = expat.ParserCreate(namespace_separator=_SEP)
    builder = _Builder(parser)
    parser.StartElementHandler = builder.start
    parser.EndElementHandler = builder.end
    parser.CharacterDataHandler = builder.data
    try:
        parser.Parse(text, True)
    except expat.ExpatError as exc:
        raise ParseError(
            f"XML syntax error: {expat.errors.messages[exc.code]}",
            format=format_token, line=exc.lineno, column=exc.offset + 1,
        ) from exc
    if builder.root is None:
        raise ParseError("document has no root element", format=format_token, line=1, column=1)
    return builder.root
