"""Syntax highlighting into HTML spans with a small, documented class set.

Classes: kw (keyword/directive), nt (tag or IRI), s (string), nv (prefixed
or variable-like name), c (comment), m (number), p (punctuation). Lexers
cover the Turtle family, XML, JSON and HTML; every character of the input
lands in exactly one token, so stripping the emitted tags and unescaping
recovers the input text byte for byte. Unlexable spans pass through
unclassed.
"""

from __future__ import annotations

import html as _html
import re

from . import formats

_Token = tuple[str | None, str]

_N3_RULES: list[tuple[str | None, re.Pattern]] = [
    ("c", re.compile(r"#[^\n]*")),
    ("kw", re.compile(r"@prefix\b|@base\b|\bPREFIX\b|\bBASE\b")),
    ("s", re.compile(r'"""(?:[^"\\]|\\.|"(?!"")|""(?!"))*"""', re.DOTALL)),
    ("s", re.compile(r"'''(?:[^'\\]|\\.|'(?!'')|''(?!''))*'''", re.DOTALL)),
    ("s", re.compile(r'"(?:[^"\\\n]|\\.)*"')),
    ("s", re.compile(r"'(?:[^'\\\n]|\\.)*'")),
    ("nt", re.compile(r"<[^>\s]*>")),
    ("kw", re.compile(r"@[A-Za-z]+(?:-[A-Za-z0-9]+)*")),
    ("p", re.compile(r"\^\^")),
    ("m", re.compile(r"[+-]?\d+\.?\d*(?:[eE][+-]?\d+)?")),
    ("kw", re.compile(r"\b(?:a|true|false)\b")),
    ("nv", re.compile(r"_:[A-Za-z0-9_.\-]+")),
    ("nv", re.compile(r"[A-Za-z_][\w.\-]*:[^\s;,.()\[\]{}\"']*")),
    ("nv", re.compile(r":[^\s;,.()\[\]{}\"']+")),
    ("p", re.compile(r"[.;,\[\]()]")),
    (None, re.compile(r"\s+")),
]

_JSON_RULES: list[tuple[str | None, re.Pattern]] = [
    ("nv", re.compile(r'"(?:[^"\\]|\\.)*"(?=\s*:)')),
    ("s", re.compile(r'"(?:[^"\\]|\\.)*"')),
    ("m", re.compile(r"-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?")),
    ("kw", re.compile(r"\b(?:true|false|null)\b")),
    ("p", re.compile(r"[{}\[\],:]")),
    (None, re.compile(r"\s+")),
]


def _lex_with_rules(text: str, rules) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        for cls, regex in rules:
            m = regex.match(text, pos)
            if m and m.end() > pos:
                tokens.append((cls, m.group(0)))
                pos = m.end()
                break
        else:
            tokens.append((None, text[pos]))
            pos += 1
    return tokens


_TAG_OPEN_RE = re.compile(r"</?[A-Za-z][\w:.\-]*")
_MARKUP_RULES: list[tuple[str | None, re.Pattern]] = [
    ("c", re.compile(r"<!--.*?(?:-->|$)", re.DOTALL)),
    ("kw", re.compile(r"<\?.*?(?:\?>|$)", re.DOTALL)),
    ("kw", re.compile(r"<![^>]*>?")),
]
_ATTR_RULES: list[tuple[str | None, re.Pattern]] = [
    ("s", re.compile(r'"[^"]*"|\'[^\']*\'')),
    ("nv", re.compile(r"[A-Za-z_][\w:.\-]*")),
    ("p", re.compile(r"=")),
    (None, re.compile(r"\s+")),
]


def _lex_markup(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch != "<":
            end = text.find("<", pos)
            if end == -1:
                end = n
            tokens.append((None, text[pos:end]))
            pos = end
            continue
        matched = False
        for cls, regex in _MARKUP_RULES:
            m = regex.match(text, pos)
            if m:
                tokens.append((cls, m.group(0)))
                pos = m.end()
                matched = True
                break
        if matched:
            continue
        m = _TAG_OPEN_RE.match(text, pos)
        if not m:
            tokens.append((None, ch))
            pos += 1
            continue
        tokens.append(("nt", m.group(0)))
        pos = m.end()
        # inside the tag until '>' (or end of input)
        while pos < n and text[pos] != ">":
            if text[pos] == "/" and pos + 1 < n and text[pos + 1] == ">":
                break
            for cls, regex in _ATTR_RULES:
                am = regex.match(text, pos)
                if am and am.end() > pos:
                    tokens.append((cls, am.group(0)))
                    pos = am.end()
                    break
            else:
                tokens.append((None, text[pos]))
                pos += 1
        close = re.match(r"/?>", text[pos:]) if pos < n else None
        if close:
            tokens.append(("nt", close.group(0)))
            pos += close.end()
    return tokens


def _lex_n3(text: str) -> list[_Token]:
    return _lex_with_rules(text, _N3_RULES)


def _lex_json(text: str) -> list[_Token]:
    return _lex_with_rules(text, _JSON_RULES)


_LEXERS = {
    formats.N3: _lex_n3,
    formats.NT: _lex_n3,
    formats.XML: _lex_markup,
    formats.PRETTY_XML: _lex_markup,
    formats.RDF_JSON: _lex_json,
    formats.RDF_JSON_PRETTY: _lex_json,
    formats.JSON_LD: _lex_json,
    formats.RDFA: _lex_markup,
    formats.MICRODATA: _lex_markup,
}

#: CSS classes emitted by the lexers, part of the public contract
CSS_CLASSES = ("kw", "nt", "s", "nv", "c", "m", "p")

DEFAULT_STYLESHEET = """\
.highlight { background: #f8f8f8; border: 1px solid #ddd; padding: .5em .8em; }
.highlight pre { margin: 0; font-family: ui-monospace, SFMono-Regular, Menlo, monospace;
                 font-size: 13px; line-height: 1.45; white-space: pre-wrap; word-break: break-all; }
.highlight .kw { color: #007020; font-weight: bold; }
.highlight .nt { color: #062873; }
.highlight .s  { color: #4070a0; }
.highlight .nv { color: #bb60d5; }
.highlight .c  { color: #60a0b0; font-style: italic; }
.highlight .m  { color: #40a070; }
.highlight .p  { color: #666666; }
"""


def highlight(text: str, format: str) -> str:
    """Wrap text in a <div class="highlight"><pre> block with token spans."""
    lexer = _LEXERS.get(format, _lex_n3)
    parts = ['<div class="highlight"><pre>']
    for cls, tok in lexer(text):
        escaped = _html.escape(tok, quote=False)
        if cls is None:
            parts.append(escaped)
        else:
            parts.append(f'<span class="{cls}">{escaped}</span>')
    parts.append("</pre></div>")
    return "".join(parts)


_TAG_STRIP_RE = re.compile(r"<[^>]*>")


def strip_tags(highlighted: str) -> str:
    """Remove markup from highlighter output (test/clipboard helper)."""
    return _TAG_STRIP_RE.sub("", highlighted)


def recovered_text(highlighted: str) -> str:
    """Invert ``highlight``: drop the emitted tags, then unescape entities."""
    return _html.unescape(strip_tags(highlighted))


def render_page(highlighted: str, title: str = "Converted output") -> str:
    """Standalone HTML page with the default stylesheet inlined."""
    return (
        "<!doctype html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
        f"<title>{_html.escape(title)}</title>\n<style>\n{DEFAULT_STYLESHEET}</style>\n"
        f"</head>\n<body>\n{highlighted}\n</body>\n</html>\n"
    )
