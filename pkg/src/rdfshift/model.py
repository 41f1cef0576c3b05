"""Format-independent RDF data model.

Terms, triples, graphs, prefix maps, blank-node bookkeeping, and graph
isomorphism (the round-trip test oracle). Graphs are plain triple sets:
duplicates collapse, iteration order is unspecified, and all serializers
sort explicitly.

Literals follow the language-XOR-datatype rule: a literal carries a
language tag or an explicit datatype, never both. Constructing the
offending combination raises ``InvalidTermError``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Union

from .errors import InvalidTermError, InvalidTripleError

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

RDF_TYPE = RDF_NS + "type"
RDF_FIRST = RDF_NS + "first"
RDF_REST = RDF_NS + "rest"
RDF_NIL = RDF_NS + "nil"
RDF_LANGSTRING = RDF_NS + "langString"

XSD_STRING = XSD_NS + "string"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_DOUBLE = XSD_NS + "double"
XSD_BOOLEAN = XSD_NS + "boolean"

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_BLANK_LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")
_LANGUAGE_RE = re.compile(r"^[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*$")
_PREFIX_NAME_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_.\-]*)?$")


def is_absolute_iri(value: str) -> bool:
    """True when the string starts with a URI scheme."""
    return bool(_SCHEME_RE.match(value))


@dataclass(frozen=True, slots=True)
class IRI:
    value: str

    def __post_init__(self):
        if not is_absolute_iri(self.value):
            raise InvalidTermError(f"IRI is not absolute: {self.value!r}")

    def __repr__(self) -> str:
        return f"IRI({self.value!r})"


@dataclass(frozen=True, slots=True)
class BlankNode:
    label: str

    def __post_init__(self):
        if not _BLANK_LABEL_RE.match(self.label):
            raise InvalidTermError(f"bad blank node label: {self.label!r}")

    def __repr__(self) -> str:
        return f"BlankNode({self.label!r})"


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: str | None = None
    language: str | None = None

    def __post_init__(self):
        if self.language is not None:
            if not _LANGUAGE_RE.match(self.language):
                raise InvalidTermError(f"bad language tag: {self.language!r}")
            if self.datatype == RDF_LANGSTRING:
                # implied type of any language-tagged string; store implicitly
                object.__setattr__(self, "datatype", None)
            elif self.datatype is not None:
                raise InvalidTermError(
                    "literal cannot carry both a language tag and a datatype: "
                    f"{self.lexical!r}@{self.language} ^^ {self.datatype}"
                )
        else:
            if self.datatype == RDF_LANGSTRING:
                raise InvalidTermError("language-string datatype requires a language tag")
            if self.datatype is not None and not is_absolute_iri(self.datatype):
                raise InvalidTermError(f"datatype IRI is not absolute: {self.datatype!r}")

    def __repr__(self) -> str:
        if self.language:
            return f"Literal({self.lexical!r}, language={self.language!r})"
        if self.datatype:
            return f"Literal({self.lexical!r}, datatype={self.datatype!r})"
        return f"Literal({self.lexical!r})"


Term = Union[IRI, BlankNode, Literal]


def term_key(term: Term) -> tuple:
    """Total order over terms: IRIs, then blanks, then literals.

    Blank labels order by (length, text) so b2 < b10 and relabeling to
    b0..bN is idempotent under re-sorting.
    """
    if isinstance(term, IRI):
        return (0, term.value)
    if isinstance(term, BlankNode):
        return (1, len(term.label), term.label)
    return (2, term.lexical, term.datatype or "", term.language or "")


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise InvalidTripleError("triple subject cannot be a literal")
        if not isinstance(self.subject, (IRI, BlankNode)):
            raise InvalidTripleError(f"bad subject: {self.subject!r}")
        if not isinstance(self.predicate, IRI):
            raise InvalidTripleError("triple predicate must be an IRI")
        if not isinstance(self.object, (IRI, BlankNode, Literal)):
            raise InvalidTripleError(f"bad object: {self.object!r}")

    def key(self) -> tuple:
        return (term_key(self.subject), term_key(self.predicate), term_key(self.object))


class PrefixMap:
    """Bindings from prefix name (possibly "") to namespace IRI.

    Rebinding a prefix replaces the old namespace. The reverse lookup
    returns a single preferred prefix (shortest name, ties by text).
    """

    def __init__(self, bindings: dict[str, str] | None = None):
        self._bindings: dict[str, str] = {}
        if bindings:
            for prefix, ns in bindings.items():
                self.bind(prefix, ns)

    def bind(self, prefix: str, namespace: str) -> None:
        if not _PREFIX_NAME_RE.match(prefix):
            raise InvalidTermError(f"bad prefix name: {prefix!r}")
        if not is_absolute_iri(namespace):
            raise InvalidTermError(f"namespace is not an absolute IRI: {namespace!r}")
        self._bindings[prefix] = namespace

    def namespace_for(self, prefix: str) -> str | None:
        return self._bindings.get(prefix)

    def prefix_for(self, namespace: str) -> str | None:
        candidates = [p for p, ns in self._bindings.items() if ns == namespace]
        if not candidates:
            return None
        return min(candidates, key=lambda p: (len(p), p))

    def items(self) -> list[tuple[str, str]]:
        return sorted(self._bindings.items())

    def copy(self) -> "PrefixMap":
        return PrefixMap(dict(self._bindings))

    def update_missing(self, other: "PrefixMap") -> None:
        """Adopt bindings from ``other`` whose prefix names are still free."""
        for prefix, ns in other.items():
            if prefix not in self._bindings:
                self._bindings[prefix] = ns

    def __contains__(self, prefix: str) -> bool:
        return prefix in self._bindings

    def __len__(self) -> int:
        return len(self._bindings)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrefixMap):
            return NotImplemented
        return self._bindings == other._bindings

    def __repr__(self) -> str:
        return f"PrefixMap({self._bindings!r})"


class Graph:
    """A duplicate-free set of triples plus a prefix map.

    Equality compares triple sets only; the prefix map is presentation
    metadata. Mutation is meant for construction; handlers treat parsed
    graphs as read-only.
    """

    def __init__(self, triples: Iterable[Triple] = (), prefixes: PrefixMap | None = None):
        self._triples: set[Triple] = set()
        self.prefixes = prefixes if prefixes is not None else PrefixMap()
        for t in triples:
            self.add(t)

    def add(self, triple: Triple) -> "Graph":
        if not isinstance(triple, Triple):
            raise InvalidTripleError(f"not a triple: {triple!r}")
        self._triples.add(triple)
        return self

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def sorted_triples(self) -> list[Triple]:
        return sorted(self._triples, key=Triple.key)

    def subjects(self) -> list[Term]:
        return sorted({t.subject for t in self._triples}, key=term_key)

    def blank_labels(self) -> set[str]:
        labels = set()
        for t in self._triples:
            for term in (t.subject, t.object):
                if isinstance(term, BlankNode):
                    labels.add(term.label)
        return labels

    def __repr__(self) -> str:
        return f"Graph(<{len(self)} triples>)"


class BlankNodeAllocator:
    """Per-parse registry mapping source labels to model-safe labels.

    Source syntaxes allow label characters the model rejects; sanitized
    labels could collide, so allocation tracks used names and suffixes
    duplicates. ``fresh`` mints labels for anonymous nodes.
    """

    def __init__(self):
        self._by_source: dict[str, str] = {}
        self._used: set[str] = set()
        self._counter = 0

    def for_label(self, source_label: str) -> BlankNode:
        label = self._by_source.get(source_label)
        if label is None:
            base = re.sub(r"[^A-Za-z0-9_]", "_", source_label) or "b"
            label = base
            n = 2
            while label in self._used:
                label = f"{base}_{n}"
                n += 1
            self._used.add(label)
            self._by_source[source_label] = label
        return BlankNode(label)

    def fresh(self) -> BlankNode:
        while True:
            label = f"gen{self._counter}"
            self._counter += 1
            if label not in self._used:
                self._used.add(label)
                return BlankNode(label)


def graph_add(graph: Graph, triple: Triple) -> Graph:
    """Set insertion; re-adding an existing triple leaves the size unchanged."""
    return graph.add(triple)


def _term_signature(term: Term) -> tuple:
    """Ground terms by value; blanks collapse to a marker (labels never leak)."""
    if isinstance(term, BlankNode):
        return ("b",)
    return term_key(term)


def _refine_signatures(graph: Graph) -> dict[str, tuple]:
    """Iteratively refine a structural color for each blank label.

    Starts from each node's ground neighborhood and folds in neighbor
    colors until the partition stops splitting. Label-independent by
    construction.
    """
    labels = graph.blank_labels()
    if not labels:
        return {}
    colors: dict[str, tuple] = {lbl: () for lbl in labels}
    for _ in range(len(labels) + 1):
        nxt: dict[str, list] = {lbl: [] for lbl in labels}
        for t in graph:
            s_blank = isinstance(t.subject, BlankNode)
            o_blank = isinstance(t.object, BlankNode)
            if s_blank:
                other = (
                    ("blank", colors[t.object.label]) if o_blank
                    else ("ground", _term_signature(t.object))
                )
                self_ref = o_blank and t.object.label == t.subject.label
                nxt[t.subject.label].append(("s", t.predicate.value, other, self_ref))
            if o_blank:
                other = (
                    ("blank", colors[t.subject.label]) if s_blank
                    else ("ground", _term_signature(t.subject))
                )
                self_ref = s_blank and t.subject.label == t.object.label
                nxt[t.object.label].append(("o", t.predicate.value, other, self_ref))
        new_colors = {lbl: tuple(sorted(entries)) for lbl, entries in nxt.items()}
        if len(set(new_colors.values())) == len(set(colors.values())):
            colors = new_colors
            break
        colors = new_colors
    return colors


def canonical_blank_labels(graph: Graph) -> Graph:
    """Rename blank labels to b0, b1, ... ordered by structural signature.

    Signature ties break on the old label's (length, text) key, which keeps
    the renaming deterministic and idempotent. The result is always
    isomorphic to the input (it is a plain relabeling).
    """
    colors = _refine_signatures(graph)
    if not colors:
        return Graph(graph, prefixes=graph.prefixes.copy())
    order = sorted(colors, key=lambda lbl: (colors[lbl], len(lbl), lbl))
    mapping = {old: f"b{i}" for i, old in enumerate(order)}

    def rename(term: Term) -> Term:
        if isinstance(term, BlankNode):
            return BlankNode(mapping[term.label])
        return term

    out = Graph(prefixes=graph.prefixes.copy())
    for t in graph:
        out.add(Triple(rename(t.subject), t.predicate, rename(t.object)))
    return out


def _apply_mapping(graph: Graph, mapping: dict[str, str]) -> set[Triple]:
    def rename(term: Term) -> Term:
        if isinstance(term, BlankNode):
            return BlankNode(mapping[term.label])
        return term

    return {Triple(rename(t.subject), t.predicate, rename(t.object)) for t in graph}


def graph_isomorphic(g1: Graph, g2: Graph) -> bool:
    """True iff some bijection over blank labels equates the triple sets.

    Ground triples compare exactly. Signature refinement narrows the
    candidate bijections; exhaustive search runs within tied classes only,
    which stays tiny for the graph sizes this package handles.
    """
    if len(g1) != len(g2):
        return False
    ground1 = {t for t in g1 if not (isinstance(t.subject, BlankNode) or isinstance(t.object, BlankNode))}
    ground2 = {t for t in g2 if not (isinstance(t.subject, BlankNode) or isinstance(t.object, BlankNode))}
    if ground1 != ground2:
        return False
    colors1 = _refine_signatures(g1)
    colors2 = _refine_signatures(g2)
    if len(colors1) != len(colors2):
        return False
    if not colors1:
        return True

    by_color1: dict[tuple, list[str]] = {}
    for lbl, c in colors1.items():
        by_color1.setdefault(c, []).append(lbl)
    by_color2: dict[tuple, list[str]] = {}
    for lbl, c in colors2.items():
        by_color2.setdefault(c, []).append(lbl)
    if set(by_color1) != set(by_color2):
        return False
    if any(len(by_color1[c]) != len(by_color2[c]) for c in by_color1):
        return False

    triples2 = set(g2)
    colors = sorted(by_color1, key=repr)
    groups1 = [sorted(by_color1[c]) for c in colors]
    groups2 = [sorted(by_color2[c]) for c in colors]

    def search(i: int, mapping: dict[str, str]) -> bool:
        if i == len(groups1):
            return _apply_mapping(g1, mapping) == triples2
        src = groups1[i]
        for perm in permutations(groups2[i]):
            mapping.update(zip(src, perm))
            if search(i + 1, mapping):
                return True
        for lbl in src:
            mapping.pop(lbl, None)
        return False

    return search(0, {})
