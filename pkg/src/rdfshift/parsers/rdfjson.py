"""RDF/JSON parser: {subject: {predicate: [value objects]}}.

Value objects carry "type" (uri | bnode | literal), "value", and for
literals optional "lang" / "datatype". The concise variant compacts
subject and predicate keys against a reserved top-level "prefixes" table,
which this parser expands transparently.
"""

from __future__ import annotations

import json

from ..errors import ParseError
from ..model import BlankNodeAllocator, Graph, IRI, Literal, Term, Triple, is_absolute_iri

PREFIX_TABLE_KEY = "prefixes"


def _load_json(text: str, format_token: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"JSON syntax error: {exc.msg}",
            format=format_token, line=exc.lineno, column=exc.colno,
        ) from exc


def parse_rdfjson(text: str, base: str | None = None) -> Graph:
    doc = _load_json(text, "rdf-json")
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object", format="rdf-json")
    graph = Graph()
    blanks = BlankNodeAllocator()

    prefixes = doc.get(PREFIX_TABLE_KEY)
    if prefixes is not None:
        if not isinstance(prefixes, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in prefixes.items()
        ):
            raise ParseError('"prefixes" must map prefix names to namespace IRIs',
                             format="rdf-json")
        for name, ns in prefixes.items():
            graph.prefixes.bind(name, ns)

    def expand_key(key: str, *, allow_blank: bool) -> Term:
        if key.startswith("_:"):
            if not allow_blank:
                raise ParseError(f"predicate cannot be a blank node: {key!r}", format="rdf-json")
            return blanks.for_label(key[2:])
        prefix, sep, local = key.partition(":")
        if sep and graph.prefixes.namespace_for(prefix) is not None and not local.startswith("//"):
            expanded = graph.prefixes.namespace_for(prefix) + local
            if is_absolute_iri(expanded):
                return IRI(expanded)
        if is_absolute_iri(key):
            return IRI(key)
        raise ParseError(f"key is not an IRI, blank node or known compact name: {key!r}",
                         format="rdf-json")

    for subject_key, predicates in doc.items():
        if subject_key == PREFIX_TABLE_KEY:
            continue
        subject = expand_key(subject_key, allow_blank=True)
        if not isinstance(predicates, dict):
            raise ParseError(f"value of subject {subject_key!r} must be an object",
                             format="rdf-json")
        for predicate_key, values in predicates.items():
            predicate = expand_key(predicate_key, allow_blank=False)
            if not isinstance(values, list):
                raise ParseError(f"values of predicate {predicate_key!r} must be an array",
                                 format="rdf-json")
            for value in values:
                graph.add(Triple(subject, predicate, _value_object(value, blanks)))
    return graph


def _value_object(value, blanks: BlankNodeAllocator) -> Term:
    if not isinstance(value, dict):
        raise ParseError(f"value entry must be an object, got {type(value).__name__}",
                         format="rdf-json")
    if "type" not in value:
        raise ParseError('value object is missing "type"', format="rdf-json")
    if "value" not in value or not isinstance(value["value"], str):
        raise ParseError('value object needs a string "value"', format="rdf-json")
    kind = value["type"]
    lexical = value["value"]
    if kind == "uri":
        if not is_absolute_iri(lexical):
            raise ParseError(f"uri value is not absolute: {lexical!r}", format="rdf-json")
        return IRI(lexical)
    if kind == "bnode":
        label = lexical[2:] if lexical.startswith("_:") else lexical
        return blanks.for_label(label)
    if kind == "literal":
        lang = value.get("lang")
        datatype = value.get("datatype")
        try:
            return Literal(lexical, datatype=datatype, language=lang)
        except ValueError as exc:
            raise ParseError(str(exc), format="rdf-json") from exc
    raise ParseError(f'unknown value type {kind!r} (expected uri, bnode or literal)',
                     format="rdf-json")
