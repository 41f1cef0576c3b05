from __future__ import annotations

import threading
from http.server import BaseHTTPRequestHandler, HTTPServer
from pathlib import Path

import pytest

from rdfshift.config import ServiceConfig
from rdfshift.model import Graph, IRI, Literal, Triple

FIXTURES = Path(__file__).parent / "fixtures"

EX = "http://example.org/#"


def ex(local: str) -> IRI:
    return IRI(EX + local)


@pytest.fixture
def simple_graph() -> Graph:
    return Graph([Triple(ex("a"), ex("b"), ex("c"))])


@pytest.fixture
def literal_graph() -> Graph:
    g = Graph()
    g.add(Triple(ex("a"), ex("name"), Literal("Alice")))
    g.add(Triple(ex("a"), ex("label"), Literal("hallo", language="de")))
    g.add(Triple(ex("a"), ex("count"), Literal("7", datatype="http://www.w3.org/2001/XMLSchema#integer")))
    return g


class StubHandler(BaseHTTPRequestHandler):
    """Serves canned responses and records request headers for assertions."""

    routes: dict[str, tuple[int, dict[str, str], bytes]] = {}
    requests: list[dict] = []

    def do_GET(self):
        type(self).requests.append({
            "path": self.path,
            "accept": self.headers.get("Accept"),
            "user-agent": self.headers.get("User-Agent"),
        })
        entry = self.routes.get(self.path)
        if entry is None:
            self.send_response(404)
            self.send_header("Content-Type", "text/plain")
            self.end_headers()
            self.wfile.write(b"not found")
            return
        status, headers, body = entry
        self.send_response(status)
        for name, value in headers.items():
            self.send_header(name, value)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


class StubServer:
    def __init__(self):
        handler = type("Handler", (StubHandler,), {"routes": {}, "requests": []})
        self.handler = handler
        self.server = HTTPServer(("127.0.0.1", 0), handler)
        self.thread = threading.Thread(target=self.server.serve_forever, daemon=True)
        self.thread.start()

    @property
    def base(self) -> str:
        return f"http://127.0.0.1:{self.server.server_port}"

    def route(self, path: str, body: bytes | str, media_type: str = "text/plain",
              status: int = 200, headers: dict[str, str] | None = None):
        if isinstance(body, str):
            body = body.encode("utf-8")
        all_headers = {"Content-Type": media_type}
        all_headers.update(headers or {})
        self.handler.routes[path] = (status, all_headers, body)

    def redirect(self, path: str, location: str, status: int = 302):
        self.handler.routes[path] = (status, {"Location": location}, b"")

    @property
    def requests(self) -> list[dict]:
        return self.handler.requests

    def stop(self):
        self.server.shutdown()
        self.server.server_close()


@pytest.fixture
def stub_server():
    server = StubServer()
    yield server
    server.stop()


@pytest.fixture
def service_config() -> ServiceConfig:
    cfg = ServiceConfig()
    cfg.fetch.allow_local = True  # tests talk to loopback stubs
    return cfg
