from __future__ import annotations

import pytest

from rdfshift.detect import detect_format
from rdfshift.errors import DetectionFailedError
from rdfshift.parsers import PARSERS

from conftest import FIXTURES

GOLDEN = {
    "sample.nt": "nt",
    "sample.n3": "n3",
    "sample.rdf": "xml",
    "sample.rj": "rdf-json",
    "sample.jsonld": "json-ld",
    "sample_rdfa.html": "rdfa",
    "sample_microdata.html": "microdata",
}

MEDIA_TYPES = {
    "sample.nt": "text/plain",
    "sample.n3": "text/n3",
    "sample.rdf": "application/rdf+xml",
    "sample.rj": "application/json",
    "sample.jsonld": "application/ld+json",
    "sample_rdfa.html": "text/html",
    "sample_microdata.html": "text/html",
}


@pytest.mark.parametrize("name,expected", sorted(GOLDEN.items()))
def test_sniffing_without_media_type(name, expected):
    content = (FIXTURES / name).read_text()
    assert detect_format(None, content) == expected


@pytest.mark.parametrize("name,expected", sorted(GOLDEN.items()))
def test_detected_format_parses_its_fixture(name, expected):
    content = (FIXTURES / name).read_text()
    fmt = detect_format(None, content)
    graph = PARSERS[fmt](content, "http://fixture.example/")
    assert len(graph) >= 1


@pytest.mark.parametrize("name,expected", sorted(GOLDEN.items()))
def test_media_type_resolution(name, expected):
    content = (FIXTURES / name).read_text()
    assert detect_format(MEDIA_TYPES[name], content) == expected


def test_mapped_media_type_wins_over_content():
    # n3 media type with JSON-looking content: the media type is trusted
    assert detect_format("text/n3", '{"looks": "like json"}') == "n3"


def test_ambiguous_families_refine_by_sniffing():
    assert detect_format("text/html", "<div itemscope></div>") == "microdata"
    assert detect_format("text/html", "<div about='x'></div>") == "rdfa"
    assert detect_format("application/json", '{"@context": {}}') == "json-ld"
    assert detect_format("application/json", '{"http://e/a": {}}') == "rdf-json"


def test_xml_prolog_and_rdf_root():
    assert detect_format(None, '<?xml version="1.0"?><rdf:RDF/>') == "xml"
    assert detect_format(None, "<rdf:RDF xmlns:rdf='ns'/>") == "xml"


def test_sparql_prefix_marker():
    assert detect_format(None, "PREFIX ex: <http://e/>\nex:a ex:b ex:c .") == "n3"


def test_detection_failure():
    with pytest.raises(DetectionFailedError):
        detect_format(None, "%%%")
    with pytest.raises(DetectionFailedError):
        detect_format("application/x-unknown", "%%%")


def test_bom_tolerated():
    assert detect_format(None, "﻿<?xml version='1.0'?><rdf:RDF/>") == "xml"
