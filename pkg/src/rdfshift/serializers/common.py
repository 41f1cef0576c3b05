"""Helpers shared by the prefix-aware serializers."""

from __future__ import annotations

from ..model import Graph, IRI, Literal, PrefixMap, Term, Triple, term_key
from ..prefixes import DEFAULT_RESOLVER, PrefixResolver
from ..text import namespace_of


def used_namespaces(graph: Graph) -> set[str]:
    spaces: set[str] = set()
    for t in graph:
        for term in (t.subject, t.predicate, t.object):
            if isinstance(term, IRI):
                ns = namespace_of(term.value)
                if ns:
                    spaces.add(ns)
            elif isinstance(term, Literal) and term.datatype:
                ns = namespace_of(term.datatype)
                if ns:
                    spaces.add(ns)
    return spaces


def effective_prefixes(graph: Graph, resolver: PrefixResolver | None = None) -> PrefixMap:
    """The graph's own bindings, filled in from the resolver for namespaces in use.

    Document bindings always win; resolver hits only claim still-free prefix
    names. With the lookup client disabled this degrades to the seed list.
    """
    resolver = resolver or DEFAULT_RESOLVER
    prefixes = graph.prefixes.copy()
    for ns in sorted(used_namespaces(graph)):
        if prefixes.prefix_for(ns) is not None:
            continue
        name = resolver.resolve(ns)
        if name is not None and name not in prefixes:
            prefixes.bind(name, ns)
    return prefixes


def group_by_subject(graph: Graph) -> list[tuple[Term, list[Triple]]]:
    """Subjects in canonical order, each with its sorted triples."""
    grouped: dict[Term, list[Triple]] = {}
    for t in graph:
        grouped.setdefault(t.subject, []).append(t)
    out = []
    for subject in sorted(grouped, key=term_key):
        out.append((subject, sorted(grouped[subject], key=Triple.key)))
    return out
