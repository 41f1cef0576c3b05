"""Shared lexical helpers: string escapes, name tokens, IRI splitting."""

from __future__ import annotations

import re

# conservative local-name token used when compacting IRIs
LOCAL_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_\-]*$|^$")

_ESCAPES = {
    "t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
    '"': '"', "'": "'", "\\": "\\",
}

_UNESCAPE_RE = re.compile(r"\\(u[0-9A-Fa-f]{4}|U[0-9A-Fa-f]{8}|.)", re.DOTALL)


def unescape_string(raw: str) -> str:
    """Decode Turtle/N-Triples string escapes. Raises ValueError on bad ones."""

    def repl(m: re.Match) -> str:
        body = m.group(1)
        if body[0] == "u" and len(body) == 5:
            return chr(int(body[1:], 16))
        if body[0] == "U" and len(body) == 9:
            code = int(body[1:], 16)
            if code > 0x10FFFF:
                raise ValueError(f"escape out of range: \\{body}")
            return chr(code)
        if body in _ESCAPES:
            return _ESCAPES[body]
        raise ValueError(f"unknown escape: \\{body}")

    if raw.endswith("\\") and not raw.endswith("\\\\"):
        raise ValueError("dangling backslash")
    return _UNESCAPE_RE.sub(repl, raw)


def escape_string(text: str) -> str:
    """Encode for a double-quoted Turtle/N-Triples literal (UTF-8 kept raw)."""
    out = []
    for ch in text:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def decode_iri_escapes(raw: str) -> str:
    """Decode \\u/\\U escapes inside an IRIREF."""

    def repl(m: re.Match) -> str:
        body = m.group(1)
        if body[0] == "u" and len(body) == 5:
            return chr(int(body[1:], 16))
        if body[0] == "U" and len(body) == 9:
            return chr(int(body[1:], 16))
        raise ValueError(f"bad IRI escape: \\{body}")

    return _UNESCAPE_RE.sub(repl, raw)


_NCNAME_START = re.compile(r"[A-Za-z_]")
_NCNAME_CHAR = re.compile(r"[A-Za-z0-9_.\-]")


def split_qname(iri: str) -> tuple[str, str] | None:
    """Split an IRI into (namespace, XML local name), or None.

    The local part is the longest trailing run of NCName characters that
    starts with a legal NCName start character; the namespace is whatever
    precedes it and must be non-empty.
    """
    i = len(iri)
    while i > 0 and _NCNAME_CHAR.match(iri[i - 1]):
        i -= 1
    while i < len(iri) and not _NCNAME_START.match(iri[i]):
        i += 1
    local = iri[i:]
    ns = iri[:i]
    if not local or not ns:
        return None
    return ns, local


def namespace_of(iri: str) -> str | None:
    """Candidate namespace: everything up to the last '#' or '/'.

    Returns None when splitting would leave no meaningful namespace
    (e.g. only the scheme) or no local part.
    """
    cut = max(iri.rfind("#"), iri.rfind("/"))
    if cut < 0:
        return None
    ns = iri[: cut + 1]
    local = iri[cut + 1:]
    if not local:
        return None
    if ns.endswith("://") or ns in ("http://", "https://"):
        return None
    if ":" not in ns:
        return None
    return ns


def xml_escape_text(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def xml_escape_attr(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )
