from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rdfshift.errors import ParseError, UnsupportedFeatureError
from rdfshift.model import (
    RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER,
    BlankNode, IRI, Literal, Triple,
)
from rdfshift.parsers import parse_ntriples, parse_turtle_n3
from rdfshift.serializers import serialize_ntriples

EX = "http://example.org/#"


def test_paper_style_prefix_document():
    g = parse_turtle_n3("@prefix : <http://example.org/#> . :a :b :c .")
    assert len(g) == 1
    assert Triple(IRI(EX + "a"), IRI(EX + "b"), IRI(EX + "c")) in g
    assert g.prefixes.namespace_for("") == EX


def test_undefined_prefix_is_parse_error():
    with pytest.raises(ParseError) as err:
        parse_turtle_n3(":a :b :c .")
    assert "prefix" in str(err.value)
    assert err.value.line == 1


def test_numeric_shorthand_expands_to_typed_literal():
    # oracle: serialize to N-Triples and compare with the hand-expanded line
    g = parse_turtle_n3("@prefix ex: <http://e/> . ex:s ex:p 42 .")
    expected = parse_ntriples(
        '<http://e/s> <http://e/p> "42"^^<http://www.w3.org/2001/XMLSchema#integer> .'
    )
    assert serialize_ntriples(g) == serialize_ntriples(expected)


@pytest.mark.parametrize("lexical,datatype", [
    ("4.5", XSD_DECIMAL), ("-0.5", XSD_DECIMAL),
    ("1e3", XSD_DOUBLE), ("2.5E-1", XSD_DOUBLE),
    ("13", XSD_INTEGER), ("-4", XSD_INTEGER),
    ("true", XSD_BOOLEAN), ("false", XSD_BOOLEAN),
])
def test_literal_shorthand_forms(lexical, datatype):
    g = parse_turtle_n3(f"@prefix ex: <http://e/> . ex:s ex:p {lexical} .")
    (triple,) = list(g)
    assert triple.object == Literal(lexical, datatype=datatype)


def test_a_keyword_and_semicolon_comma():
    g = parse_turtle_n3(
        "@prefix ex: <http://e/> .\n"
        "ex:s a ex:T ;\n"
        "     ex:p ex:o1, ex:o2 .\n"
    )
    assert len(g) == 3
    assert Triple(IRI("http://e/s"), IRI(RDF_TYPE), IRI("http://e/T")) in g


def test_blank_node_property_list():
    g = parse_turtle_n3("@prefix ex: <http://e/> . ex:s ex:p [ ex:q ex:o ] .")
    assert len(g) == 2
    inner = [t for t in g if t.predicate.value == "http://e/q"]
    assert isinstance(inner[0].subject, BlankNode)


def test_anonymous_blank_subject():
    g = parse_turtle_n3("@prefix ex: <http://e/> . [ ex:p ex:o ] .")
    assert len(g) == 1


def test_labeled_blank_nodes():
    g = parse_turtle_n3("@prefix ex: <http://e/> . _:n1 ex:p _:n2 . _:n2 ex:p _:n1 .")
    assert len(g.blank_labels()) == 2


def test_collection_builds_list_cells():
    g = parse_turtle_n3("@prefix ex: <http://e/> . ex:s ex:p (ex:a ex:b) .")
    firsts = [t for t in g if t.predicate.value == RDF_FIRST]
    rests = [t for t in g if t.predicate.value == RDF_REST]
    assert len(firsts) == 2
    assert len(rests) == 2
    assert any(t.object.value == RDF_NIL for t in rests if isinstance(t.object, IRI))


def test_empty_collection_is_nil():
    g = parse_turtle_n3("@prefix ex: <http://e/> . ex:s ex:p () .")
    (triple,) = list(g)
    assert triple.object == IRI(RDF_NIL)


def test_base_resolution():
    g = parse_turtle_n3("@base <http://host/dir/> . <doc> <p> <#frag> .")
    (triple,) = list(g)
    assert triple.subject == IRI("http://host/dir/doc")
    assert triple.object == IRI("http://host/dir/#frag")


def test_default_base_applies_to_relative_iris():
    g = parse_turtle_n3("<s> <p> <o> .")
    (triple,) = list(g)
    assert triple.subject.value.startswith("http://example.org/")


def test_sparql_style_prefix_without_dot():
    g = parse_turtle_n3('PREFIX ex: <http://e/>\nex:s ex:p ex:o .')
    assert len(g) == 1


def test_long_strings_and_quotes():
    g = parse_turtle_n3('@prefix ex: <http://e/> . ex:s ex:p """multi\nline "quoted\\"""" .')
    (triple,) = list(g)
    assert triple.object.lexical == 'multi\nline "quoted"'


def test_single_quoted_strings():
    g = parse_turtle_n3("@prefix ex: <http://e/> . ex:s ex:p 'hi' .")
    (triple,) = list(g)
    assert triple.object == Literal("hi")


def test_language_tag_and_datatype():
    g = parse_turtle_n3(
        '@prefix ex: <http://e/> . @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n'
        'ex:s ex:p "x"@en ; ex:q "7"^^xsd:byte .'
    )
    objects = {t.object for t in g}
    assert Literal("x", language="en") in objects
    assert Literal("7", datatype="http://www.w3.org/2001/XMLSchema#byte") in objects


def test_pn_local_escapes():
    g = parse_turtle_n3(r"@prefix ex: <http://e/> . ex:s ex:p ex:o\#f .")
    (triple,) = list(g)
    assert triple.object == IRI("http://e/o#f")


@pytest.mark.parametrize("doc,feature", [
    ("{ <http://e/a> <http://e/b> <http://e/c> } => { <http://e/d> <http://e/e> <http://e/f> } .", "formulae"),
    ("@prefix ex: <http://e/> . ?x ex:p ex:o .", "variables"),
    ("@prefix ex: <http://e/> . ex:a = ex:b .", "equality"),
    ("@prefix ex: <http://e/> . ex:a!ex:p ex:q ex:o .", "path"),
])
def test_n3_only_features_rejected(doc, feature):
    with pytest.raises(UnsupportedFeatureError):
        parse_turtle_n3(doc)


def test_error_position_on_second_line():
    with pytest.raises(ParseError) as err:
        parse_turtle_n3("@prefix ex: <http://e/> .\nex:s ex:p %%% .")
    assert err.value.line == 2


_VALID = "@prefix ex: <http://e/> .\n" + "\n".join(
    f"ex:s{i} ex:p ex:o{i} ." for i in range(5)
)


@settings(max_examples=30, deadline=None)
@given(k=st.integers(min_value=2, max_value=6))
def test_injected_garbage_line_position(k):
    lines = _VALID.split("\n")
    lines.insert(k - 1, "%%%")
    with pytest.raises(ParseError) as err:
        parse_turtle_n3("\n".join(lines))
    assert err.value.line == k


def test_empty_document():
    assert len(parse_turtle_n3("")) == 0
    assert len(parse_turtle_n3("# nothing here\n")) == 0
