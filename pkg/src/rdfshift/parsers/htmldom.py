"""Tag-soup tolerant HTML tree for the RDFa and Microdata extractors.

Built on html.parser: entity references decode into text, unclosed tags
close at end of input, stray end tags are ignored. Real pages are
malformed; nothing here validates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from html.parser import HTMLParser

from ..errors import ParseError

VOID_TAGS = {
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr",
}


@dataclass
class HtmlElement:
    tag: str
    attrs: dict[str, str]
    line: int
    column: int
    children: list = field(default_factory=list)  # HtmlElement | str

    def get(self, name: str) -> str | None:
        return self.attrs.get(name)

    def has(self, name: str) -> bool:
        return name in self.attrs

    def child_elements(self) -> list["HtmlElement"]:
        return [c for c in self.children if isinstance(c, HtmlElement)]

    def text_content(self) -> str:
        parts = []
        for child in self.children:
            if isinstance(child, str):
                parts.append(child)
            else:
                parts.append(child.text_content())
        return "".join(parts)


class _TreeBuilder(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.root = HtmlElement("#document", {}, 1, 1)
        self.stack = [self.root]

    def handle_starttag(self, tag, attrs):
        line, col = self.getpos()
        merged: dict[str, str] = {}
        for name, value in attrs:
            merged.setdefault(name, value if value is not None else "")
        el = HtmlElement(tag, merged, line, col + 1)
        self.stack[-1].children.append(el)
        if tag not in VOID_TAGS:
            self.stack.append(el)

    def handle_startendtag(self, tag, attrs):
        line, col = self.getpos()
        merged: dict[str, str] = {}
        for name, value in attrs:
            merged.setdefault(name, value if value is not None else "")
        self.stack[-1].children.append(HtmlElement(tag, merged, line, col + 1))

    def handle_endtag(self, tag):
        for i in range(len(self.stack) - 1, 0, -1):
            if self.stack[i].tag == tag:
                del self.stack[i:]
                return
        # stray end tag: ignore

    def handle_data(self, data):
        if data:
            self.stack[-1].children.append(data)


def parse_html(text: str, format_token: str) -> HtmlElement:
    builder = _TreeBuilder()
    try:
        builder.feed(text)
        builder.close()
    except Exception as exc:  # html.parser hardly ever raises, but be honest when it does
        line, col = builder.getpos()
        raise ParseError(
            f"unparseable HTML: {exc}", format=format_token, line=line, column=col + 1
        ) from exc
    return builder.root


def iter_elements(el: HtmlElement):
    for child in el.child_elements():
        yield child
        yield from iter_elements(child)
