from __future__ import annotations

import json

import pytest
from starlette.testclient import TestClient

from rdfshift import formats
from rdfshift.service import bookmarklet_matrix, build_share_links, create_app

N3_SNIPPET = "@prefix : <http://example.org/#> . :a :b :c ."
NT_LINE = "<http://example.org/#a> <http://example.org/#b> <http://example.org/#c> ."


@pytest.fixture
def client(service_config):
    return TestClient(create_app(service_config))


class TestPostConversion:
    def test_n3_to_nt(self, client):
        resp = client.post("/convert/n3/nt/content", data={"content": N3_SNIPPET})
        assert resp.status_code == 200
        assert resp.text.rstrip("\n") == NT_LINE
        assert resp.headers["content-type"] == "text/plain"

    def test_missing_content_field(self, client):
        resp = client.post("/convert/n3/nt/content", data={"other": "x"})
        assert resp.status_code == 400
        assert resp.text.strip()

    def test_empty_content_gives_empty_body(self, client):
        resp = client.post("/convert/n3/nt/content", data={"content": ""})
        assert resp.status_code == 200
        assert resp.text == ""

    def test_parse_error_is_400_with_position(self, client):
        resp = client.post("/convert/n3/nt/content", data={"content": ":a :b %% ."})
        assert resp.status_code == 400
        assert "line 1" in resp.text

    def test_html_render(self, client):
        resp = client.post("/convert/n3/json-ld/html/content", data={"content": N3_SNIPPET})
        assert resp.status_code == 200
        assert resp.headers["content-type"] == "text/html"
        assert '<div class="highlight">' in resp.text

    def test_detect_source_allowed_for_text(self, client):
        resp = client.post("/convert/detect/nt/content", data={"content": N3_SNIPPET})
        assert resp.status_code == 200
        assert resp.text.rstrip("\n") == NT_LINE

    def test_undetectable_content_is_415(self, client):
        resp = client.post("/convert/detect/nt/content", data={"content": "%%%"})
        assert resp.status_code == 415


class TestGetConversion:
    def test_remote_document_conversion(self, client, stub_server):
        stub_server.route("/doc.n3", N3_SNIPPET, "text/n3")
        resp = client.get(f"/convert/n3/nt/{stub_server.base}/doc.n3")
        assert resp.status_code == 200
        assert resp.text.rstrip("\n") == NT_LINE

    def test_html_route_returns_page(self, client, stub_server):
        stub_server.route("/doc.n3", N3_SNIPPET, "text/n3")
        resp = client.get(f"/convert/n3/json-ld/html/{stub_server.base}/doc.n3")
        assert resp.status_code == 200
        assert resp.headers["content-type"] == "text/html"
        assert '<div class="highlight">' in resp.text
        assert "<style>" in resp.text  # shared links render standalone

    def test_upstream_404_is_502(self, client, stub_server):
        resp = client.get(f"/convert/n3/nt/{stub_server.base}/missing")
        assert resp.status_code == 502

    def test_detect_uses_media_type(self, client, stub_server):
        stub_server.route("/data", N3_SNIPPET, "text/turtle")
        resp = client.get(f"/convert/detect/nt/{stub_server.base}/data")
        assert resp.status_code == 200
        assert resp.text.rstrip("\n") == NT_LINE

    def test_unknown_source_token(self, client):
        resp = client.get("/convert/bogus/n3/http://e/")
        assert resp.status_code == 400

    def test_target_only_token_as_source(self, client):
        resp = client.get("/convert/pretty-xml/n3/http://e/")
        assert resp.status_code == 400
        assert "target" in resp.text

    def test_detect_as_target_rejected(self, client):
        resp = client.get("/convert/n3/detect/http://e/")
        assert resp.status_code == 400

    def test_final_uri_is_base_for_relative_iris(self, client, stub_server):
        stub_server.redirect("/short", "/dir/doc.ttl")
        stub_server.route("/dir/doc.ttl", "<item> <p> <o> .", "text/turtle")
        resp = client.get(f"/convert/n3/nt/{stub_server.base}/short")
        assert resp.status_code == 200
        assert f"{stub_server.base}/dir/item" in resp.text


class TestMediaTypeContract:
    @pytest.mark.parametrize("token", sorted(formats.TARGET_FORMATS))
    def test_raw_content_types(self, client, token):
        resp = client.post(f"/convert/n3/{token}/content", data={"content": N3_SNIPPET})
        assert resp.status_code == 200
        assert resp.headers["content-type"] == formats.media_type_for(token, "raw")

    @pytest.mark.parametrize("token", sorted(formats.TARGET_FORMATS))
    def test_html_content_types(self, client, token):
        resp = client.post(f"/convert/n3/{token}/html/content", data={"content": N3_SNIPPET})
        assert resp.status_code == 200
        assert resp.headers["content-type"] == "text/html"


class TestCors:
    def test_success_routes_carry_cors(self, client):
        for path, method, kwargs in [
            ("/", "get", {}),
            ("/health", "get", {}),
            ("/bookmarklets.json", "get", {}),
            ("/convert/n3/nt/content", "post", {"data": {"content": N3_SNIPPET}}),
        ]:
            resp = getattr(client, method)(path, **kwargs)
            assert resp.headers.get("access-control-allow-origin") == "*", path

    def test_error_responses_carry_cors(self, client, stub_server):
        cases = [
            client.get("/convert/bogus/nt/http://e/"),                      # 400
            client.post("/convert/detect/nt/content", data={"content": "%%%"}),  # 415
            client.get(f"/convert/n3/nt/{stub_server.base}/missing"),       # 502
            client.get("/no/such/route"),                                   # 404
        ]
        for resp in cases:
            assert resp.headers.get("access-control-allow-origin") == "*", resp.status_code


class TestStatelessness:
    def test_replay_yields_identical_outcome(self, client, stub_server):
        stub_server.route("/doc.n3", N3_SNIPPET, "text/n3")
        url = f"/convert/n3/pretty-xml/{stub_server.base}/doc.n3"
        first = client.get(url)
        second = client.get(url)
        assert first.status_code == second.status_code == 200
        assert first.content == second.content
        assert first.headers["content-type"] == second.headers["content-type"]


class TestShareLinks:
    def test_links_are_the_two_route_shapes(self):
        html_link, raw_link = build_share_links("xml", "n3", "http://e/doc", "http://svc")
        assert html_link == "http://svc/convert/xml/n3/html/http://e/doc"
        assert raw_link == "http://svc/convert/xml/n3/http://e/doc"

    def test_links_are_stable(self):
        a = build_share_links("xml", "n3", "http://e/doc")
        b = build_share_links("xml", "n3", "http://e/doc")
        assert a == b


class TestBookmarklets:
    def test_matrix_has_72_entries(self):
        matrix = bookmarklet_matrix("http://svc")
        assert len(matrix) == 72
        assert len({(m["source"], m["target"]) for m in matrix}) == 72

    def test_rdfa_n3_entry_shape(self):
        matrix = bookmarklet_matrix("http://svc")
        entry = next(m for m in matrix if m["source"] == "rdfa" and m["target"] == "n3")
        assert entry["bookmarklet"] == (
            "javascript:location.href='http://svc/convert/rdfa/n3/html/'"
            "+encodeURIComponent(location.href);"
        )

    def test_endpoint_serves_matrix(self, client):
        resp = client.get("/bookmarklets.json")
        assert resp.status_code == 200
        matrix = json.loads(resp.text)
        assert len(matrix) == 72
        for entry in matrix:
            assert "/convert/" in entry["bookmarklet"]
            assert "/html/" in entry["bookmarklet"]


class TestPlumbing:
    def test_health(self, client):
        assert client.get("/health").status_code == 200

    def test_index_served(self, client):
        resp = client.get("/")
        assert resp.status_code == 200
        assert resp.headers["content-type"] == "text/html"

    def test_index_prefers_ui_bundle(self, tmp_path, service_config):
        (tmp_path / "index.html").write_text("<html><body>UI BUNDLE</body></html>")
        service_config.ui_dir = str(tmp_path)
        client = TestClient(create_app(service_config))
        assert "UI BUNDLE" in client.get("/").text
