"""The RESTful front door.

Routes:
    GET  /convert/{source}/{target}/{uri}
    GET  /convert/{source}/{target}/html/{uri}
    POST /convert/{source}/{target}/content
    POST /convert/{source}/{target}/html/content
    GET  /            -> UI bundle (or a minimal built-in page)
    GET  /health
    GET  /bookmarklets.json   -> the bookmarklet matrix for the UI

Everything after the target (and optional /html) path segment is the
input URI, slashes and all; clients percent-encode '?' and '#'. Every
response, errors included, carries Access-Control-Allow-Origin: *.
Handlers are stateless; the only shared state is the prefix cache.
"""

from __future__ import annotations

import json
import os

from starlette.applications import Starlette
from starlette.concurrency import run_in_threadpool
from starlette.requests import Request
from starlette.responses import FileResponse, PlainTextResponse, Response
from starlette.routing import Route

from . import formats
from .config import ServiceConfig
from .convert import check_source, check_target, decode_payload, resolve_source
from .errors import (
    DetectionFailedError, FetchError, ParseError, RdfShiftError,
    SerializeError, UnknownFormatError,
)
from .fetch import fetch_document
from .highlight import highlight, render_page
from .parsers import PARSERS
from .prefixes import DisabledLookup, FixtureLookup, HttpLookup, PrefixResolver
from .serializers import SERIALIZERS

#: source tokens offered in the bookmarklet matrix: the 7 formats plus detect
BOOKMARKLET_SOURCES = formats.SOURCE_FORMATS + (formats.DETECT,)


def build_share_links(source: str, target: str, uri: str, base: str = "") -> tuple[str, str]:
    """(highlighted, raw) persistent links for a URI submission."""
    html_link = f"{base}/convert/{source}/{target}/html/{uri}"
    raw_link = f"{base}/convert/{source}/{target}/{uri}"
    return html_link, raw_link


def bookmarklet_matrix(base: str) -> list[dict[str, str]]:
    """All source x target combinations as javascript: bookmarklet URIs."""
    matrix = []
    for source in BOOKMARKLET_SOURCES:
        for target in formats.TARGET_FORMATS:
            code = (
                f"javascript:location.href='{base}/convert/{source}/{target}/html/'"
                "+encodeURIComponent(location.href);"
            )
            matrix.append({"source": source, "target": target, "bookmarklet": code})
    return matrix


class _CorsEverywhere:
    """Stamp Access-Control-Allow-Origin: * onto every outgoing response."""

    def __init__(self, app):
        self.app = app

    async def __call__(self, scope, receive, send):
        if scope["type"] != "http":
            await self.app(scope, receive, send)
            return

        async def send_with_cors(message):
            if message["type"] == "http.response.start":
                headers = list(message.get("headers", []))
                headers.append((b"access-control-allow-origin", b"*"))
                message = {**message, "headers": headers}
            await send(message)

        await self.app(scope, receive, send_with_cors)


_FALLBACK_INDEX = """<!doctype html>
<html lang="en"><head><meta charset="utf-8"><title>rdfshift</title></head>
<body>
<h1>rdfshift</h1>
<p>Stateless RDF serialization converter. The browser UI bundle is not
installed; the REST API is fully available:</p>
<pre>
GET  /convert/&lt;source&gt;/&lt;target&gt;/&lt;uri&gt;
GET  /convert/&lt;source&gt;/&lt;target&gt;/html/&lt;uri&gt;
POST /convert/&lt;source&gt;/&lt;target&gt;/content        (content=&lt;data&gt;)
POST /convert/&lt;source&gt;/&lt;target&gt;/html/content
</pre>
</body></html>
"""


def _error_response(status: int, message: str) -> PlainTextResponse:
    return PlainTextResponse(message + "\n", status_code=status)


def create_app(config: ServiceConfig | None = None) -> Starlette:
    config = config or ServiceConfig()

    if config.lookup.fixture_path:
        client = FixtureLookup(path=config.lookup.fixture_path)
    elif config.lookup.enabled:
        client = HttpLookup(config.lookup.base_url, config.lookup.timeout,
                            user_agent=config.fetch.user_agent)
    else:
        client = DisabledLookup()
    resolver = PrefixResolver(client, ttl=config.lookup.ttl,
                              negative_ttl=config.lookup.negative_ttl)

    def run_conversion(source: str, target: str, render: str,
                       content: str, base: str | None,
                       media_type: str | None) -> Response:
        try:
            check_source(source)
            check_target(target)
        except UnknownFormatError as exc:
            return _error_response(400, str(exc))
        try:
            resolved = resolve_source(source, content, media_type)
            graph = PARSERS[resolved](content, base)
            output = SERIALIZERS[target](graph, resolver)
        except DetectionFailedError as exc:
            return _error_response(415, str(exc))
        except ParseError as exc:
            return _error_response(400, f"conversion failed: {exc}")
        except SerializeError as exc:
            return _error_response(400, f"conversion failed: {exc}")
        except RdfShiftError as exc:
            return _error_response(400, f"conversion failed: {exc}")
        if render == "html":
            page = render_page(highlight(output, target),
                               title=f"{source} to {target}")
            return Response(page, headers={"content-type": "text/html"})
        return Response(output, headers={"content-type": formats.media_type_for(target)})

    def _convert_get_sync(source: str, target: str, render: str, uri: str) -> Response:
        try:
            check_source(source)
            check_target(target)
        except UnknownFormatError as exc:
            return _error_response(400, str(exc))
        try:
            fetched = fetch_document(uri, source, config.fetch)
        except FetchError as exc:
            return _error_response(502, f"cannot retrieve {uri!r}: {exc.message}")
        try:
            content = decode_payload(fetched.content)
        except UnicodeDecodeError as exc:
            return _error_response(400, f"document is not valid UTF-8: {exc}")
        return run_conversion(source, target, render, content,
                              fetched.final_uri, fetched.media_type)

    async def convert_get(request: Request) -> Response:
        # fetch + parse are blocking; keep them off the event loop
        return await run_in_threadpool(
            _convert_get_sync,
            request.path_params["source"],
            request.path_params["target"],
            "html" if request.path_params.get("html") else "raw",
            request.path_params["uri"],
        )

    async def convert_post(request: Request) -> Response:
        source = request.path_params["source"]
        target = request.path_params["target"]
        render = "html" if request.path_params.get("html") else "raw"
        try:
            form = await request.form()
        except Exception:
            return _error_response(400, "request body is not valid form data")
        if "content" not in form:
            return _error_response(400, "missing form field 'content'")
        content = form["content"]
        if not isinstance(content, str):
            return _error_response(400, "form field 'content' must be text")
        return await run_in_threadpool(
            run_conversion, source, target, render, content,
            config.default_base, None,
        )

    async def convert_get_html(request: Request) -> Response:
        request.path_params["html"] = True
        return await convert_get(request)

    async def convert_post_html(request: Request) -> Response:
        request.path_params["html"] = True
        return await convert_post(request)

    async def health(request: Request) -> Response:
        return PlainTextResponse("ok\n")

    async def bookmarklets(request: Request) -> Response:
        base = str(request.base_url).rstrip("/")
        return Response(json.dumps(bookmarklet_matrix(base), indent=2),
                        headers={"content-type": "application/json"})

    async def index(request: Request) -> Response:
        if config.ui_dir:
            candidate = os.path.join(config.ui_dir, "index.html")
            if os.path.isfile(candidate):
                return FileResponse(candidate, headers={"content-type": "text/html"})
        return Response(_FALLBACK_INDEX, headers={"content-type": "text/html"})

    async def ui_asset(request: Request) -> Response:
        name = request.path_params["name"]
        if config.ui_dir and "/" not in name and ".." not in name:
            candidate = os.path.join(config.ui_dir, name)
            if os.path.isfile(candidate):
                return FileResponse(candidate)
        return _error_response(404, f"no such asset: {name}")

    routes = [
        Route("/", index),
        Route("/health", health),
        Route("/bookmarklets.json", bookmarklets),
        Route("/ui/{name}", ui_asset),
        Route("/convert/{source}/{target}/html/content", convert_post_html, methods=["POST"]),
        Route("/convert/{source}/{target}/content", convert_post, methods=["POST"]),
        Route("/convert/{source}/{target}/html/{uri:path}", convert_get_html, methods=["GET"]),
        Route("/convert/{source}/{target}/{uri:path}", convert_get, methods=["GET"]),
    ]
    app = Starlette(routes=routes)
    app.add_middleware(_CorsEverywhere)
    return app
