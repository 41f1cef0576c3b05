from __future__ import annotations

import subprocess
import sys

N3_SNIPPET = "@prefix : <http://example.org/#> . :a :b :c ."
NT_LINE = "<http://example.org/#a> <http://example.org/#b> <http://example.org/#c> .\n"


def run_cli(args, stdin: bytes = b"") -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "rdfshift", *args],
        input=stdin, capture_output=True, timeout=60,
    )


class TestStdinConversion:
    def test_n3_to_nt(self):
        proc = run_cli(["--from", "n3", "--to", "nt", "-"], N3_SNIPPET.encode())
        assert proc.returncode == 0
        assert proc.stdout.decode() == NT_LINE

    def test_detect_source(self):
        proc = run_cli(["--from", "detect", "--to", "nt", "-"], N3_SNIPPET.encode())
        assert proc.returncode == 0
        assert proc.stdout.decode() == NT_LINE

    def test_html_flag(self):
        proc = run_cli(["--from", "n3", "--to", "n3", "--html", "-"], N3_SNIPPET.encode())
        assert proc.returncode == 0
        assert b'<div class="highlight">' in proc.stdout
        assert b"<style>" in proc.stdout


class TestFileConversion:
    def test_file_to_stdout(self, tmp_path):
        src = tmp_path / "example.n3"
        src.write_text(N3_SNIPPET)
        proc = run_cli(["--from", "n3", "--to", "nt", str(src)])
        assert proc.returncode == 0
        assert proc.stdout.decode() == NT_LINE

    def test_file_workflow_to_new_file(self, tmp_path):
        src = tmp_path / "example.n3"
        dst = tmp_path / "example.nt"
        src.write_text(N3_SNIPPET)
        proc = run_cli(["--from", "n3", "--to", "nt", str(src)])
        dst.write_bytes(proc.stdout)
        assert dst.read_text() == NT_LINE

    def test_relative_iris_use_cwd_base(self, tmp_path):
        src = tmp_path / "rel.ttl"
        src.write_text("<item> <p> <o> .")
        proc = run_cli(["--from", "n3", "--to", "nt", str(src)])
        assert proc.returncode == 0
        assert b"file://" in proc.stdout

    def test_explicit_base_wins(self, tmp_path):
        src = tmp_path / "rel.ttl"
        src.write_text("<item> <p> <o> .")
        proc = run_cli(["--from", "n3", "--to", "nt", "--base", "http://b.example/", str(src)])
        assert b"<http://b.example/item>" in proc.stdout


class TestExitCodes:
    def test_parse_error_is_1_with_position(self):
        proc = run_cli(["--from", "n3", "--to", "nt", "-"], b":a :b %% .")
        assert proc.returncode == 1
        assert b"line 1" in proc.stderr

    def test_fetch_error_is_2(self):
        proc = run_cli(["--from", "n3", "--to", "nt", "http://127.0.0.1:1/none"])
        assert proc.returncode == 2

    def test_bad_source_token_is_3(self):
        proc = run_cli(["--from", "bogus", "--to", "nt", "-"], b"")
        assert proc.returncode == 3

    def test_bad_target_token_is_3(self):
        proc = run_cli(["--from", "n3", "--to", "bogus", "-"], b"")
        assert proc.returncode == 3

    def test_missing_required_flag_is_3(self):
        proc = run_cli(["--to", "nt", "-"])
        assert proc.returncode == 3

    def test_pretty_variant_as_source_is_3(self):
        proc = run_cli(["--from", "pretty-xml", "--to", "nt", "-"], b"")
        assert proc.returncode == 3
