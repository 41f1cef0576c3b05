/** Format tokens shared with the conversion service's URI grammar. */

export const SOURCE_FORMATS = [
  "rdfa",
  "microdata",
  "xml",
  "n3",
  "nt",
  "rdf-json",
  "json-ld",
] as const;

export const TARGET_FORMATS = [
  "rdfa",
  "microdata",
  "xml",
  "pretty-xml",
  "n3",
  "nt",
  "rdf-json",
  "rdf-json-pretty",
  "json-ld",
] as const;

export type SourceFormat = (typeof SOURCE_FORMATS)[number] | "detect";
export type TargetFormat = (typeof TARGET_FORMATS)[number];

export const FORMAT_LABELS: Record<string, string> = {
  rdfa: "RDFa",
  microdata: "Microdata",
  xml: "RDF/XML",
  "pretty-xml": "RDF/XML (concise)",
  n3: "N3 / Turtle",
  nt: "N-Triples",
  "rdf-json": "RDF/JSON",
  "rdf-json-pretty": "RDF/JSON (concise)",
  "json-ld": "JSON-LD",
  detect: "Auto-detect",
};

/** Working example snippet for every source format (text-input tab). */
export const EXAMPLES: Record<string, string> = {
  n3: '@prefix : <http://example.org/#> .\n:a :b :c .\n',
  nt: "<http://example.org/#a> <http://example.org/#b> <http://example.org/#c> .\n",
  xml:
    '<?xml version="1.0" encoding="utf-8"?>\n' +
    '<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"\n' +
    '         xmlns:foaf="http://xmlns.com/foaf/0.1/">\n' +
    '  <rdf:Description rdf:about="http://example.org/#a">\n' +
    '    <foaf:name>Alice</foaf:name>\n' +
    "  </rdf:Description>\n" +
    "</rdf:RDF>\n",
  "rdf-json":
    '{\n  "http://example.org/#a": {\n    "http://example.org/#b": [\n' +
    '      {"type": "uri", "value": "http://example.org/#c"}\n    ]\n  }\n}\n',
  "json-ld":
    '{\n  "@context": {"name": "http://xmlns.com/foaf/0.1/name"},\n' +
    '  "@id": "http://example.org/#a",\n  "name": "Alice"\n}\n',
  rdfa:
    '<div about="http://example.org/#a" prefix="foaf: http://xmlns.com/foaf/0.1/">\n' +
    '  <span property="foaf:name">Alice</span>\n</div>\n',
  microdata:
    '<div itemscope itemtype="http://schema.org/Person" itemid="http://example.org/#a">\n' +
    '  <span itemprop="name">Alice</span>\n</div>\n',
};

/** URI the field is pre-filled with: a page carrying structured annotations. */
export const EXAMPLE_URI = "http://www.heppnetz.de/";
