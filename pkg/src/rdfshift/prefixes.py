"""Namespace-prefix resolution: seed vocabulary list plus pluggable reverse lookup.

The seed covers the common vocabularies and always wins. Unknown namespaces
go to a lookup client (live HTTP, fixture file, or disabled); results are
cached with a TTL and failures are negative-cached so a dead lookup service
cannot stall conversions. Lookup failures degrade to None and serializers
fall back to full IRIs.
"""

from __future__ import annotations

import json
import re
import threading
import time
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass

from .model import PrefixMap, RDF_NS, RDFS_NS, XSD_NS
from .text import LOCAL_NAME_RE

SEED_PREFIXES: dict[str, str] = {
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "xsd": XSD_NS,
    "owl": "http://www.w3.org/2002/07/owl#",
    "foaf": "http://xmlns.com/foaf/0.1/",
    "dc": "http://purl.org/dc/elements/1.1/",
    "dcterms": "http://purl.org/dc/terms/",
    "skos": "http://www.w3.org/2004/02/skos/core#",
    "schema": "http://schema.org/",
    "gr": "http://purl.org/goodrelations/v1#",
    "vcard": "http://www.w3.org/2006/vcard/ns#",
    "sioc": "http://rdfs.org/sioc/ns#",
    "void": "http://rdfs.org/ns/void#",
    "geo": "http://www.w3.org/2003/01/geo/wgs84_pos#",
    "doap": "http://usefulinc.com/ns/doap#",
    "vann": "http://purl.org/vocab/vann/",
    "cc": "http://creativecommons.org/ns#",
    "bibo": "http://purl.org/ontology/bibo/",
    "prov": "http://www.w3.org/ns/prov#",
    "qb": "http://purl.org/linked-data/cube#",
    "dcat": "http://www.w3.org/ns/dcat#",
    "org": "http://www.w3.org/ns/org#",
    "time": "http://www.w3.org/2006/time#",
    "wot": "http://xmlns.com/wot/0.1/",
    "xhv": "http://www.w3.org/1999/xhtml/vocab#",
    "ical": "http://www.w3.org/2002/12/cal/ical#",
    "rev": "http://purl.org/stuff/rev#",
    "og": "http://ogp.me/ns#",
    "ctag": "http://commontag.org/ns#",
    "gldp": "http://www.w3.org/ns/people#",
    "grddl": "http://www.w3.org/2003/g/data-view#",
    "ma": "http://www.w3.org/ns/ma-ont#",
    "rif": "http://www.w3.org/2007/rif#",
    "rr": "http://www.w3.org/ns/r2rml#",
    "sd": "http://www.w3.org/ns/sparql-service-description#",
    "wdr": "http://www.w3.org/2007/05/powder#",
}


class DisabledLookup:
    """Never resolves anything; the offline default."""

    def lookup(self, namespace: str) -> str | None:
        return None


class FixtureLookup:
    """Answers from an in-memory (or JSON-file) namespace-to-prefix table."""

    def __init__(self, table: dict[str, str] | None = None, path: str | None = None):
        if path is not None:
            with open(path, encoding="utf-8") as fh:
                table = json.load(fh)
        self.table = dict(table or {})

    def lookup(self, namespace: str) -> str | None:
        return self.table.get(namespace)


class HttpLookup:
    """Reverse lookup against a prefix.cc-style endpoint.

    GET <base>/reverse?uri=<namespace>&format=json. The response is a
    one-entry JSON object; both orientations found in the wild
    ({prefix: namespace} and {namespace: prefix}) are accepted.
    """

    def __init__(self, base_url: str = "http://prefix.cc", timeout: float = 2.0,
                 user_agent: str = "rdfshift"):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self.user_agent = user_agent

    def lookup(self, namespace: str) -> str | None:
        url = f"{self.base_url}/reverse?uri={urllib.parse.quote(namespace, safe='')}&format=json"
        request = urllib.request.Request(url, headers={"User-Agent": self.user_agent})
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as response:
                payload = json.loads(response.read().decode("utf-8"))
        except (urllib.error.URLError, OSError, ValueError):
            return None
        if not isinstance(payload, dict):
            return None
        for key, value in payload.items():
            if value == namespace and isinstance(key, str):
                return key
            if key == namespace and isinstance(value, str):
                return value
        return None


@dataclass
class _CacheEntry:
    prefix: str | None
    expires: float


class PrefixResolver:
    """seed -> cache -> lookup client, with TTLs and in-flight de-duplication."""

    def __init__(self, client=None, *, ttl: float = 86400.0, negative_ttl: float = 3600.0,
                 seed: dict[str, str] | None = None, clock=time.monotonic):
        self.client = client if client is not None else DisabledLookup()
        self.ttl = ttl
        self.negative_ttl = negative_ttl
        self._clock = clock
        self._cache: dict[str, _CacheEntry] = {}
        self._lock = threading.Lock()
        self._in_flight: dict[str, threading.Event] = {}
        seed_map = SEED_PREFIXES if seed is None else seed
        self._seed_by_ns = {ns: prefix for prefix, ns in seed_map.items()}
        self._seed_by_prefix = dict(seed_map)

    def seed_prefix_map(self) -> PrefixMap:
        return PrefixMap(dict(self._seed_by_prefix))

    def resolve(self, namespace: str) -> str | None:
        seeded = self._seed_by_ns.get(namespace)
        if seeded is not None:
            return seeded
        now = self._clock()
        with self._lock:
            entry = self._cache.get(namespace)
            if entry is not None and entry.expires > now:
                return entry.prefix
            waiter = self._in_flight.get(namespace)
            if waiter is None:
                self._in_flight[namespace] = threading.Event()
            # else: fall through and wait outside the lock
        if waiter is not None:
            waiter.wait(timeout=30)
            with self._lock:
                entry = self._cache.get(namespace)
                return entry.prefix if entry is not None else None
        try:
            prefix = self.client.lookup(namespace)
        except Exception:
            prefix = None
        if prefix is not None and not re.match(r"^[A-Za-z_][A-Za-z0-9_.\-]*$", prefix):
            prefix = None
        expires = self._clock() + (self.ttl if prefix is not None else self.negative_ttl)
        with self._lock:
            self._cache[namespace] = _CacheEntry(prefix, expires)
            event = self._in_flight.pop(namespace)
        event.set()
        return prefix


#: resolver used when callers do not supply one: seed list only, no network
DEFAULT_RESOLVER = PrefixResolver(DisabledLookup())


def resolve_prefix(namespace: str, resolver: PrefixResolver | None = None) -> str | None:
    return (resolver or DEFAULT_RESOLVER).resolve(namespace)


def compact_iri(iri: str, prefixes: PrefixMap) -> str | None:
    """Longest-namespace-match compaction to prefix:local, or None.

    Compaction only happens when the leftover local part is a legal name
    token, so the result re-expands to the same IRI.
    """
    best: tuple[str, str] | None = None
    for prefix, namespace in prefixes.items():
        if iri.startswith(namespace) and (best is None or len(namespace) > len(best[1])):
            local = iri[len(namespace):]
            if LOCAL_NAME_RE.match(local):
                best = (prefix, namespace)
    if best is None:
        return None
    return f"{best[0]}:{iri[len(best[1]):]}"
