"""Remote document retrieval: content negotiation, redirects, limits.

Redirects are followed manually so every hop passes the address guard and
the final URI is known (it becomes the base for relative IRIs). Bodies
stream against a size cap. Loopback and link-local targets are refused
unless the configuration says otherwise (self-hosted test rigs).
"""

from __future__ import annotations

import ipaddress
import re
import socket
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass

from . import formats
from .config import FetchConfig
from .errors import FetchError

_SCHEME_SLASHES_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*://")

_REDIRECT_CODES = {301, 302, 303, 307, 308}

_ACCEPT_BY_FORMAT = {
    formats.XML: "application/rdf+xml, application/xml;q=0.6, */*;q=0.1",
    formats.N3: "text/n3, text/turtle;q=0.9, application/x-turtle;q=0.8, */*;q=0.1",
    formats.NT: "text/plain, application/n-triples;q=0.9, */*;q=0.1",
    formats.RDF_JSON: "application/json, */*;q=0.1",
    formats.JSON_LD: "application/ld+json, application/json;q=0.9, */*;q=0.1",
    formats.RDFA: "text/html, application/xhtml+xml;q=0.9, */*;q=0.1",
    formats.MICRODATA: "text/html, application/xhtml+xml;q=0.9, */*;q=0.1",
}

# every media type from the response table appears when the source is unknown
_ACCEPT_DETECT = (
    "application/rdf+xml, text/html;q=0.9, application/xhtml+xml;q=0.9, "
    "text/n3;q=0.9, text/turtle;q=0.9, application/ld+json;q=0.8, "
    "application/json;q=0.8, text/plain;q=0.7, */*;q=0.1"
)


def accept_header_for(source_format: str) -> str:
    if source_format == formats.DETECT:
        return _ACCEPT_DETECT
    header = _ACCEPT_BY_FORMAT.get(source_format)
    if header is None:
        return _ACCEPT_DETECT
    return header


def normalize_uri(uri: str) -> str:
    """Prepend http:// to scheme-less input; https must be written in full."""
    uri = uri.strip()
    if not uri:
        raise FetchError("network", "empty URI")
    if _SCHEME_SLASHES_RE.match(uri):
        return uri
    return "http://" + uri.lstrip("/")


def _guard_host(uri: str, config: FetchConfig) -> None:
    if config.allow_local:
        return
    host = urllib.parse.urlsplit(uri).hostname
    if host is None:
        raise FetchError("network", f"URI has no host: {uri!r}")
    lowered = host.lower().rstrip(".")
    if lowered == "localhost" or lowered.endswith(".localhost"):
        raise FetchError("refused", f"refusing to fetch from loopback host {host!r}")
    try:
        addr = ipaddress.ip_address(lowered.strip("[]"))
    except ValueError:
        return  # plain hostname: allowed (no resolver-level guard)
    if addr.is_loopback or addr.is_link_local or addr.is_unspecified:
        raise FetchError("refused", f"refusing to fetch from local address {host!r}")


class _NoRedirect(urllib.request.HTTPRedirectHandler):
    def redirect_request(self, req, fp, code, msg, headers, newurl):
        return None


_OPENER = urllib.request.build_opener(_NoRedirect())


@dataclass
class FetchResult:
    content: bytes
    media_type: str | None
    final_uri: str


def fetch_document(uri: str, source_format: str = formats.DETECT,
                   config: FetchConfig | None = None) -> FetchResult:
    """GET the document, negotiating for the source format's media types."""
    config = config or FetchConfig()
    current = normalize_uri(uri)
    headers = {
        "Accept": accept_header_for(source_format),
        "User-Agent": config.user_agent,
    }

    for _ in range(config.max_redirects + 1):
        _guard_host(current, config)
        request = urllib.request.Request(current, headers=headers, method="GET")
        try:
            response = _OPENER.open(request, timeout=config.timeout)
        except urllib.error.HTTPError as exc:
            if exc.code in _REDIRECT_CODES:
                location = exc.headers.get("Location")
                exc.close()
                if not location:
                    raise FetchError("network", f"redirect without Location from {current}")
                current = urllib.parse.urljoin(current, location)
                continue
            exc.close()
            raise FetchError(
                "http-status",
                f"upstream returned HTTP {exc.code} for {current}",
                status=exc.code,
            ) from exc
        except socket.timeout as exc:
            raise FetchError("timeout", f"timed out fetching {current}") from exc
        except urllib.error.URLError as exc:
            if isinstance(exc.reason, socket.timeout):
                raise FetchError("timeout", f"timed out fetching {current}") from exc
            raise FetchError("network", f"cannot fetch {current}: {exc.reason}") from exc
        except (OSError, ValueError) as exc:
            raise FetchError("network", f"cannot fetch {current}: {exc}") from exc

        with response:
            body = response.read(config.max_bytes + 1)
            if len(body) > config.max_bytes:
                raise FetchError(
                    "too-large",
                    f"document exceeds the {config.max_bytes} byte limit: {current}",
                )
            media_type = response.headers.get("Content-Type")
            return FetchResult(body, media_type, response.geturl() or current)

    raise FetchError(
        "too-many-redirects",
        f"more than {config.max_redirects} redirects starting from {uri!r}",
    )
