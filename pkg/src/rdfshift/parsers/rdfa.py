"""RDFa extractor: the attribute subset of RDFa Core 1.1.

Attributes handled: vocab, prefix, about, resource, typeof, property, rel,
content, datatype, plus href/src as resource fallbacks and lang / xml:lang
inheritance. Subject/object chaining follows the element tree, including
hanging-rel completion. Unknown attributes and unresolvable terms are
ignored; RDFa is lenient by design.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from urllib.parse import urljoin

from ..model import (
    RDF_TYPE,
    BlankNodeAllocator, Graph, IRI, Literal, Term, Triple, is_absolute_iri,
)
from .htmldom import HtmlElement, parse_html
from .turtle import DEFAULT_BASE

_PREFIX_ATTR_RE = re.compile(r"([A-Za-z_][\w.\-]*):\s+(\S+)")


@dataclass
class _Ctx:
    base: str
    subject: Term
    pending: tuple[Term, list[IRI]] | None
    prefixes: dict[str, str]
    vocab: str | None
    lang: str | None


class _RdfaParser:
    def __init__(self, base: str):
        self.graph = Graph()
        self.blanks = BlankNodeAllocator()
        self.base = base

    def expand_ref(self, value: str, ctx: _Ctx) -> Term | None:
        """Expand about/resource values: safe CURIEs, CURIEs, _:labels, IRIs."""
        value = value.strip()
        if value.startswith("[") and value.endswith("]"):
            value = value[1:-1].strip()
        if value.startswith("_:"):
            label = value[2:]
            return self.blanks.for_label(label) if label else self.blanks.fresh()
        prefix, sep, local = value.partition(":")
        if sep and prefix in ctx.prefixes and not local.startswith("//"):
            return IRI(ctx.prefixes[prefix] + local)
        if is_absolute_iri(value):
            return IRI(value)
        return IRI(urljoin(ctx.base, value))

    def expand_terms(self, value: str, ctx: _Ctx) -> list[IRI]:
        """Expand property/rel/typeof/datatype tokens; unresolvable ones drop."""
        out: list[IRI] = []
        for token in value.split():
            prefix, sep, local = token.partition(":")
            if sep and prefix in ctx.prefixes and not local.startswith("//"):
                out.append(IRI(ctx.prefixes[prefix] + local))
            elif is_absolute_iri(token):
                out.append(IRI(token))
            elif ctx.vocab and re.match(r"^[A-Za-z_][\w.\-]*$", token):
                out.append(IRI(ctx.vocab + token))
        return out

    def walk(self, el: HtmlElement, ctx: _Ctx):
        prefixes = ctx.prefixes
        prefix_attr = el.get("prefix")
        if prefix_attr:
            prefixes = dict(prefixes)
            for name, ns in _PREFIX_ATTR_RE.findall(prefix_attr):
                prefixes[name] = ns
        vocab = el.get("vocab") if el.has("vocab") else ctx.vocab
        vocab = vocab or None
        lang = el.get("lang") or el.get("xml:lang")
        lang = lang if lang else (None if el.has("lang") or el.has("xml:lang") else ctx.lang)
        local = _Ctx(ctx.base, ctx.subject, ctx.pending, prefixes, vocab, lang)

        has_about = el.has("about")
        has_typeof = el.has("typeof")
        prop_terms = self.expand_terms(el.get("property") or "", local) if el.has("property") else None
        rel_terms = self.expand_terms(el.get("rel") or "", local) if el.has("rel") else None
        resource_value = next(
            (el.get(a) for a in ("resource", "href", "src") if el.has(a)), None
        )

        new_subject: Term | None = None
        if has_about:
            new_subject = self.expand_ref(el.get("about") or "", local)
        elif has_typeof and prop_terms is None:
            if resource_value is not None:
                new_subject = self.expand_ref(resource_value, local)
            else:
                new_subject = self.blanks.fresh()
        elif resource_value is not None and prop_terms is None and rel_terms is None:
            new_subject = self.expand_ref(resource_value, local)

        subject = new_subject if new_subject is not None else local.subject

        pending = local.pending
        if new_subject is not None and pending is not None:
            for pred in pending[1]:
                self.graph.add(Triple(pending[0], pred, new_subject))
            pending = None

        child_subject = subject
        child_pending = pending

        # typed resource: property + typeof without about types the object side
        typed_object: Term | None = None
        if has_typeof and prop_terms is not None and not has_about:
            typed_object = (
                self.expand_ref(resource_value, local) if resource_value is not None
                else self.blanks.fresh()
            )
            for t in self.expand_terms(el.get("typeof") or "", local):
                self.graph.add(Triple(typed_object, IRI(RDF_TYPE), t))
        elif has_typeof:
            for t in self.expand_terms(el.get("typeof") or "", local):
                self.graph.add(Triple(subject, IRI(RDF_TYPE), t))

        if prop_terms:
            if typed_object is not None:
                obj: Term = typed_object
                child_subject = typed_object
            elif el.has("content"):
                obj = self._literal(el.get("content") or "", el, local)
            elif resource_value is not None and rel_terms is None:
                obj = self.expand_ref(resource_value, local)
            else:
                obj = self._literal(el.text_content(), el, local)
            for pred in prop_terms:
                self.graph.add(Triple(subject, pred, obj))

        if rel_terms is not None:
            if resource_value is not None:
                obj = self.expand_ref(resource_value, local)
                for pred in rel_terms:
                    self.graph.add(Triple(subject, pred, obj))
                child_subject = obj
                child_pending = None
            elif rel_terms:
                child_pending = (subject, rel_terms)

        child_ctx = _Ctx(local.base, child_subject, child_pending, prefixes, vocab, lang)
        for child in el.child_elements():
            self.walk(child, child_ctx)

    def _literal(self, text: str, el: HtmlElement, ctx: _Ctx) -> Literal:
        if el.has("datatype"):
            dt_value = (el.get("datatype") or "").strip()
            if not dt_value:
                return Literal(text)
            dts = self.expand_terms(dt_value, ctx)
            if dts:
                return Literal(text, datatype=dts[0].value)
            return Literal(text)
        if ctx.lang:
            return Literal(text, language=ctx.lang)
        return Literal(text)


def parse_rdfa(text: str, base: str | None = None) -> Graph:
    base = base or DEFAULT_BASE
    root = parse_html(text, format_token="rdfa")
    parser = _RdfaParser(base)
    ctx = _Ctx(base, IRI(base), None, {}, None, None)
    for child in root.child_elements():
        parser.walk(child, ctx)
    for name, ns in sorted(_collect_prefixes(root).items()):
        try:
            parser.graph.prefixes.bind(name, ns)
        except ValueError:
            pass
    return parser.graph


def _collect_prefixes(root: HtmlElement) -> dict[str, str]:
    found: dict[str, str] = {}

    def scan(el: HtmlElement):
        attr = el.get("prefix")
        if attr:
            for name, ns in _PREFIX_ATTR_RE.findall(attr):
                if is_absolute_iri(ns):
                    found.setdefault(name, ns)
        for child in el.child_elements():
            scan(child)

    scan(root)
    return found
