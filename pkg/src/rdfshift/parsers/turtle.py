"""Turtle parser (the N3 subset this service supports).

Covers @prefix/@base (plus the SPARQL-style spellings), prefixed names,
the ``a`` keyword, all literal forms with language tags, datatypes and
numeric/boolean shorthand, collections, blank-node property lists, and
the ``;`` / ``,`` separators. N3-only constructs (formulae, rules, paths,
variables) raise UnsupportedFeatureError.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from urllib.parse import urljoin

from ..errors import ParseError, UnsupportedFeatureError
from ..model import (
    RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE,
    XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER,
    BlankNodeAllocator, Graph, IRI, Literal, Term, Triple, is_absolute_iri,
)
from ..text import decode_iri_escapes, unescape_string

DEFAULT_BASE = "http://example.org/"

_PN_LOCAL_ESC = r"\\[_~.\-!$&'()*+,;=/?#@%]"
_PLX = rf"%[0-9A-Fa-f]{{2}}|{_PN_LOCAL_ESC}"
_PN_CHARS = r"[A-Za-z0-9_\-\u00C0-\uFFFF]"
_LOCAL = rf"(?:{_PN_CHARS}|:|{_PLX})(?:(?:{_PN_CHARS}|[.:]|{_PLX})*(?:{_PN_CHARS}|:|{_PLX}))?"

_TOKEN_SPECS = [
    ("COMMENT", re.compile(r"#[^\n]*")),
    ("WS", re.compile(r"[ \t\r\n]+")),
    ("IRIREF", re.compile(r"<([^<>\"{}|^`\\\x00-\x20]*)>")),
    ("STRING_LONG2", re.compile(r'"""(?:[^"\\]|\\.|"(?!"")|""(?!"))*"""', re.DOTALL)),
    ("STRING_LONG1", re.compile(r"'''(?:[^'\\]|\\.|'(?!'')|''(?!'))*'''", re.DOTALL)),
    ("STRING2", re.compile(r'"(?:[^"\\\n\r]|\\.)*"')),
    ("STRING1", re.compile(r"'(?:[^'\\\n\r]|\\.)*'")),
    ("PREFIX_DIR", re.compile(r"@prefix\b")),
    ("BASE_DIR", re.compile(r"@base\b")),
    ("SPARQL_PREFIX", re.compile(r"PREFIX\b", re.IGNORECASE)),
    ("SPARQL_BASE", re.compile(r"BASE\b", re.IGNORECASE)),
    ("LANGTAG", re.compile(r"@[A-Za-z]{1,8}(?:-[A-Za-z0-9]{1,8})*")),
    ("DOUBLE", re.compile(r"[+-]?(?:\d+\.\d*[eE][+-]?\d+|\.?\d+[eE][+-]?\d+)")),
    ("DECIMAL", re.compile(r"[+-]?\d*\.\d+")),
    ("INTEGER", re.compile(r"[+-]?\d+")),
    ("HATHAT", re.compile(r"\^\^")),
    ("BLANK", re.compile(r"_:[A-Za-z0-9_][A-Za-z0-9_.\-]*")),
    ("ANON_OPEN", re.compile(r"\[")),
    ("ANON_CLOSE", re.compile(r"\]")),
    ("LPAREN", re.compile(r"\(")),
    ("RPAREN", re.compile(r"\)")),
    ("SEMI", re.compile(r";")),
    ("COMMA", re.compile(r",")),
    ("DOT", re.compile(r"\.")),
    # unsupported N3 constructs, lexed so we can reject them by name
    ("N3_IMPLIES", re.compile(r"=>|<=")),
    ("N3_FORMULA", re.compile(r"[{}]")),
    ("N3_VAR", re.compile(r"\?[A-Za-z0-9_]+")),
    ("N3_EQUALS", re.compile(r"=")),
    ("N3_PATH", re.compile(r"[!^]")),
    ("PNAME", re.compile(rf"(?:[A-Za-z_\u00C0-\uFFFF]{_PN_CHARS}*)?:(?:{_LOCAL})?")),
    ("KEYWORD_A", re.compile(r"a(?=[ \t\r\n<\[(_\"']|$)")),
    ("BOOL", re.compile(r"(?:true|false)\b")),
]

_N3_FEATURES = {
    "N3_IMPLIES": "N3 rules (=> / <=)",
    "N3_FORMULA": "N3 formulae ({ ... })",
    "N3_VAR": "N3 variables (?x)",
    "N3_EQUALS": "N3 equality (=)",
    "N3_PATH": "N3 path syntax (! / ^)",
}


@dataclass
class _Token:
    kind: str
    value: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    line = 1
    col = 1
    n = len(text)
    while pos < n:
        for kind, regex in _TOKEN_SPECS:
            m = regex.match(text, pos)
            if m:
                value = m.group(0)
                if kind not in ("WS", "COMMENT"):
                    tokens.append(_Token(kind, value, line, col))
                newlines = value.count("\n")
                if newlines:
                    line += newlines
                    col = len(value) - value.rfind("\n")
                else:
                    col += len(value)
                pos = m.end()
                break
        else:
            raise ParseError(
                f"unexpected character {text[pos]!r}",
                format="n3", line=line, column=col,
            )
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _TurtleParser:
    def __init__(self, text: str, base: str | None):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.base = base or DEFAULT_BASE
        self.graph = Graph()
        self.blanks = BlankNodeAllocator()

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: _Token | None = None, *, unsupported: bool = False):
        tok = tok or self.peek()
        cls = UnsupportedFeatureError if unsupported else ParseError
        raise cls(message, format="n3", line=tok.line, column=tok.column)

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            self.error(f"expected {what}, found {tok.value!r}" if tok.value else f"expected {what}", tok)
        return tok

    # --- grammar ---

    def parse(self) -> Graph:
        while True:
            tok = self.peek()
            if tok.kind == "EOF":
                break
            if tok.kind in _N3_FEATURES:
                self.error(f"unsupported N3 feature: {_N3_FEATURES[tok.kind]}", tok, unsupported=True)
            if tok.kind == "PREFIX_DIR":
                self.next()
                self._prefix_directive(sparql=False)
            elif tok.kind == "BASE_DIR":
                self.next()
                iri_tok = self.expect("IRIREF", "IRI after @base")
                self.base = self._resolve(self._iri_value(iri_tok))
                self.expect("DOT", "'.' after @base")
            elif tok.kind == "SPARQL_PREFIX":
                self.next()
                self._prefix_directive(sparql=True)
            elif tok.kind == "SPARQL_BASE":
                self.next()
                iri_tok = self.expect("IRIREF", "IRI after BASE")
                self.base = self._resolve(self._iri_value(iri_tok))
            else:
                self._triples()
        return self.graph

    def _prefix_directive(self, *, sparql: bool):
        name_tok = self.expect("PNAME", "prefix name")
        if not name_tok.value.endswith(":") or name_tok.value.count(":") != 1:
            self.error(f"bad prefix declaration: {name_tok.value!r}", name_tok)
        prefix = name_tok.value[:-1]
        iri_tok = self.expect("IRIREF", "namespace IRI")
        namespace = self._resolve(self._iri_value(iri_tok))
        try:
            self.graph.prefixes.bind(prefix, namespace)
        except ValueError as exc:
            self.error(str(exc), iri_tok)
        if not sparql:
            self.expect("DOT", "'.' after @prefix")

    def _triples(self):
        tok = self.peek()
        if tok.kind == "ANON_OPEN":
            subject = self._blank_node_property_list()
            if self.peek().kind != "DOT":
                self._predicate_object_list(subject)
            self.expect("DOT", "'.' after statement")
        else:
            subject = self._subject()
            self._predicate_object_list(subject)
            self.expect("DOT", "'.' after statement")

    def _subject(self) -> Term:
        tok = self.next()
        if tok.kind == "IRIREF":
            return IRI(self._resolve(self._iri_value(tok)))
        if tok.kind == "PNAME":
            return IRI(self._expand_pname(tok))
        if tok.kind == "BLANK":
            return self.blanks.for_label(tok.value[2:])
        if tok.kind == "LPAREN":
            return self._collection()
        if tok.kind in _N3_FEATURES:
            self.error(f"unsupported N3 feature: {_N3_FEATURES[tok.kind]}", tok, unsupported=True)
        self.error(f"expected subject, found {tok.value!r}", tok)

    def _predicate_object_list(self, subject: Term):
        while True:
            predicate = self._verb()
            self._object_list(subject, predicate)
            if self.peek().kind == "SEMI":
                while self.peek().kind == "SEMI":
                    self.next()
                if self.peek().kind in ("DOT", "ANON_CLOSE", "EOF"):
                    return
                continue
            return

    def _verb(self) -> IRI:
        tok = self.next()
        if tok.kind == "KEYWORD_A":
            return IRI(RDF_TYPE)
        if tok.kind == "IRIREF":
            return IRI(self._resolve(self._iri_value(tok)))
        if tok.kind == "PNAME":
            return IRI(self._expand_pname(tok))
        if tok.kind in _N3_FEATURES:
            self.error(f"unsupported N3 feature: {_N3_FEATURES[tok.kind]}", tok, unsupported=True)
        self.error(f"expected predicate, found {tok.value!r}", tok)

    def _object_list(self, subject: Term, predicate: IRI):
        while True:
            obj = self._object()
            self.graph.add(Triple(subject, predicate, obj))
            if self.peek().kind == "COMMA":
                self.next()
                continue
            return

    def _object(self) -> Term:
        tok = self.next()
        if tok.kind == "IRIREF":
            return IRI(self._resolve(self._iri_value(tok)))
        if tok.kind == "PNAME":
            return IRI(self._expand_pname(tok))
        if tok.kind == "BLANK":
            return self.blanks.for_label(tok.value[2:])
        if tok.kind == "ANON_OPEN":
            return self._blank_node_property_list_at(tok)
        if tok.kind == "LPAREN":
            return self._collection()
        if tok.kind in ("STRING2", "STRING1", "STRING_LONG2", "STRING_LONG1"):
            return self._literal(tok)
        if tok.kind == "INTEGER":
            return Literal(tok.value, datatype=XSD_INTEGER)
        if tok.kind == "DECIMAL":
            return Literal(tok.value, datatype=XSD_DECIMAL)
        if tok.kind == "DOUBLE":
            return Literal(tok.value, datatype=XSD_DOUBLE)
        if tok.kind == "BOOL":
            return Literal(tok.value, datatype=XSD_BOOLEAN)
        if tok.kind in _N3_FEATURES:
            self.error(f"unsupported N3 feature: {_N3_FEATURES[tok.kind]}", tok, unsupported=True)
        self.error(f"expected object, found {tok.value!r}", tok)

    def _blank_node_property_list(self) -> Term:
        tok = self.expect("ANON_OPEN", "'['")
        return self._blank_node_property_list_at(tok)

    def _blank_node_property_list_at(self, open_tok: _Token) -> Term:
        node = self.blanks.fresh()
        if self.peek().kind == "ANON_CLOSE":
            self.next()
            return node
        self._predicate_object_list(node)
        self.expect("ANON_CLOSE", "']' closing blank node")
        return node

    def _collection(self) -> Term:
        items: list[Term] = []
        while self.peek().kind != "RPAREN":
            if self.peek().kind == "EOF":
                self.error("unterminated collection")
            items.append(self._object())
        self.next()  # consume ')'
        if not items:
            return IRI(RDF_NIL)
        head = self.blanks.fresh()
        node = head
        for i, item in enumerate(items):
            self.graph.add(Triple(node, IRI(RDF_FIRST), item))
            if i == len(items) - 1:
                self.graph.add(Triple(node, IRI(RDF_REST), IRI(RDF_NIL)))
            else:
                nxt = self.blanks.fresh()
                self.graph.add(Triple(node, IRI(RDF_REST), nxt))
                node = nxt
        return head

    def _literal(self, tok: _Token) -> Literal:
        raw = tok.value
        if tok.kind in ("STRING_LONG2", "STRING_LONG1"):
            body = raw[3:-3]
        else:
            body = raw[1:-1]
        try:
            lexical = unescape_string(body)
        except ValueError as exc:
            self.error(str(exc), tok)
        nxt = self.peek()
        if nxt.kind == "LANGTAG":
            self.next()
            return Literal(lexical, language=nxt.value[1:])
        if nxt.kind == "HATHAT":
            self.next()
            dt_tok = self.next()
            if dt_tok.kind == "IRIREF":
                datatype = self._resolve(self._iri_value(dt_tok))
            elif dt_tok.kind == "PNAME":
                datatype = self._expand_pname(dt_tok)
            else:
                self.error("expected datatype IRI after ^^", dt_tok)
            try:
                return Literal(lexical, datatype=datatype)
            except ValueError as exc:
                self.error(str(exc), dt_tok)
        return Literal(lexical)

    # --- helpers ---

    def _iri_value(self, tok: _Token) -> str:
        try:
            return decode_iri_escapes(tok.value[1:-1])
        except ValueError as exc:
            self.error(str(exc), tok)

    def _resolve(self, iri: str) -> str:
        if is_absolute_iri(iri):
            return iri
        return urljoin(self.base, iri)

    def _expand_pname(self, tok: _Token) -> str:
        prefix, _, local = tok.value.partition(":")
        namespace = self.graph.prefixes.namespace_for(prefix)
        if namespace is None:
            self.error(f"undefined prefix: {prefix!r}:", tok)
        local = re.sub(_PN_LOCAL_ESC, lambda m: m.group(0)[1], local)
        return namespace + local


def parse_turtle_n3(text: str, base: str | None = None) -> Graph:
    """Parse Turtle text into a graph; prefix bindings land in the prefix map."""
    return _TurtleParser(text, base).parse()
