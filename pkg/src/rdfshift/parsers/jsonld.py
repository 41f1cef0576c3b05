"""JSON-LD parser for the supported subset.

Handles @context with simple term-to-IRI string mappings (used both as
terms and as prefixes for compact IRIs), @id, @type, @value/@language/@type
value objects, arrays, nested node objects and @graph. Remote contexts and
the container/reverse keyword family raise UnsupportedFeatureError; terms
with no mapping are dropped, as JSON-LD expansion does.
"""

from __future__ import annotations

from urllib.parse import urljoin

from ..errors import ParseError, UnsupportedFeatureError
from ..model import (
    RDF_TYPE, XSD_BOOLEAN, XSD_DOUBLE, XSD_INTEGER,
    BlankNodeAllocator, Graph, IRI, Literal, Term, Triple, is_absolute_iri,
)
from .rdfjson import _load_json
from .turtle import DEFAULT_BASE

_SUPPORTED_KEYWORDS = {"@context", "@id", "@type", "@value", "@language", "@graph"}
_FMT = "json-ld"


class _JsonLdParser:
    def __init__(self, base: str | None):
        self.graph = Graph()
        self.blanks = BlankNodeAllocator()
        self.base = base or DEFAULT_BASE
        self.context: dict[str, str] = {}

    def error(self, message: str, *, unsupported: bool = False):
        cls = UnsupportedFeatureError if unsupported else ParseError
        raise cls(message, format=_FMT)

    def run(self, doc) -> Graph:
        if isinstance(doc, list):
            for node in doc:
                self.node(node)
            return self.graph
        if not isinstance(doc, dict):
            self.error("top level must be a JSON object or array")
        self.read_context(doc.get("@context"))
        if "@graph" in doc:
            nodes = doc["@graph"]
            if not isinstance(nodes, list):
                self.error("@graph must be an array")
            for node in nodes:
                self.node(node)
            remaining = {k: v for k, v in doc.items() if k not in ("@context", "@graph")}
            if remaining:
                self.node(remaining)
        else:
            body = {k: v for k, v in doc.items() if k != "@context"}
            if body:
                self.node(body)
        return self.graph

    def read_context(self, ctx) -> None:
        if ctx is None:
            return
        if isinstance(ctx, str):
            self.error(f"remote contexts are not supported: {ctx!r}", unsupported=True)
        if isinstance(ctx, list):
            self.error("context arrays are not supported", unsupported=True)
        if not isinstance(ctx, dict):
            self.error("@context must be an object")
        for term, mapping in ctx.items():
            if term.startswith("@"):
                self.error(f"context keyword {term!r} is not supported", unsupported=True)
            if not isinstance(mapping, str):
                self.error(f"context entry {term!r} must map to an IRI string "
                           "(expanded term definitions are not supported)", unsupported=True)
            if not is_absolute_iri(mapping):
                self.error(f"context entry {term!r} must map to an absolute IRI")
            self.context[term] = mapping
            try:
                self.graph.prefixes.bind(term, mapping)
            except ValueError:
                pass  # context terms that are not legal prefix names stay term-only

    def expand_key(self, key: str) -> str | None:
        """Expand a predicate key to an IRI; None means 'drop this term'."""
        if key in self.context:
            return self.context[key]
        prefix, sep, local = key.partition(":")
        if sep and prefix in self.context and not local.startswith("//"):
            return self.context[prefix] + local
        if is_absolute_iri(key):
            return key
        return None

    def expand_ref(self, value: str) -> Term:
        """Expand an @id/@type reference to an IRI or blank node."""
        if value.startswith("_:"):
            return self.blanks.for_label(value[2:])
        if value in self.context:
            return IRI(self.context[value])
        prefix, sep, local = value.partition(":")
        if sep and prefix in self.context and not local.startswith("//"):
            return IRI(self.context[prefix] + local)
        if is_absolute_iri(value):
            return IRI(value)
        return IRI(urljoin(self.base, value))

    def node(self, obj) -> Term:
        if not isinstance(obj, dict):
            self.error(f"node must be a JSON object, got {type(obj).__name__}")
        for key in obj:
            if key.startswith("@") and key not in _SUPPORTED_KEYWORDS:
                self.error(f"keyword {key!r} is not supported", unsupported=True)
        if "@context" in obj:
            self.error("nested contexts are not supported", unsupported=True)

        id_value = obj.get("@id")
        if id_value is not None:
            if not isinstance(id_value, str):
                self.error("@id must be a string")
            subject = self.expand_ref(id_value)
            if isinstance(subject, Literal):
                self.error(f"@id does not name a node: {id_value!r}")
        else:
            subject = self.blanks.fresh()

        types = obj.get("@type")
        if types is not None:
            if isinstance(types, str):
                types = [types]
            if not isinstance(types, list):
                self.error("@type must be a string or array of strings")
            for t in types:
                if not isinstance(t, str):
                    self.error("@type entries must be strings")
                self.graph.add(Triple(subject, IRI(RDF_TYPE), self.expand_ref(t)))

        for key, raw_value in obj.items():
            if key.startswith("@"):
                continue
            predicate = self.expand_key(key)
            if predicate is None:
                continue  # unmapped term: dropped by expansion
            values = raw_value if isinstance(raw_value, list) else [raw_value]
            for value in values:
                obj_term = self.value(value)
                if obj_term is not None:
                    self.graph.add(Triple(subject, IRI(predicate), obj_term))
        return subject

    def value(self, value) -> Term | None:
        if isinstance(value, str):
            return Literal(value)
        if isinstance(value, bool):
            return Literal("true" if value else "false", datatype=XSD_BOOLEAN)
        if isinstance(value, int):
            return Literal(str(value), datatype=XSD_INTEGER)
        if isinstance(value, float):
            return Literal(repr(value), datatype=XSD_DOUBLE)
        if value is None:
            return None
        if isinstance(value, list):
            self.error("nested arrays are not supported")
        if not isinstance(value, dict):
            self.error(f"unsupported value: {value!r}")
        if "@value" in value:
            return self.value_object(value)
        if "@id" in value and len([k for k in value if not k.startswith("@")]) == 0 and "@type" not in value:
            ref = value["@id"]
            if not isinstance(ref, str):
                self.error("@id must be a string")
            return self.expand_ref(ref)
        return self.node(value)

    def value_object(self, obj: dict) -> Literal:
        for key in obj:
            if key not in ("@value", "@language", "@type"):
                self.error(f"unsupported key in value object: {key!r}",
                           unsupported=key.startswith("@"))
        lexical = obj["@value"]
        if isinstance(lexical, bool):
            lexical = "true" if lexical else "false"
        elif isinstance(lexical, (int, float)):
            lexical = str(lexical)
        elif not isinstance(lexical, str):
            self.error("@value must be a scalar")
        language = obj.get("@language")
        datatype = obj.get("@type")
        if datatype is not None:
            expanded = self.expand_key(datatype) if isinstance(datatype, str) else None
            if expanded is None:
                self.error(f"@type in value object must be an IRI: {datatype!r}")
            datatype = expanded
        try:
            return Literal(lexical, datatype=datatype, language=language)
        except ValueError as exc:
            self.error(str(exc))


def parse_jsonld(text: str, base: str | None = None) -> Graph:
    doc = _load_json(text, _FMT)
    return _JsonLdParser(base).run(doc)
