// @vitest-environment jsdom
import { afterEach, describe, expect, it, vi } from "vitest";

import { fetchMatrix, MATRIX_SOURCES, renderMatrix } from "../src/bookmarklets.js";
import { TARGET_FORMATS } from "../src/formats.js";

function buildEntries(base = "http://svc.example") {
  const entries = [];
  for (const source of MATRIX_SOURCES) {
    for (const target of TARGET_FORMATS) {
      entries.push({
        source,
        target,
        bookmarklet:
          `javascript:location.href='${base}/convert/${source}/${target}/html/'` +
          "+encodeURIComponent(location.href);",
      });
    }
  }
  return entries;
}

afterEach(() => {
  vi.unstubAllGlobals();
  document.body.innerHTML = "";
});

describe("renderMatrix", () => {
  it("renders an 8x9 grid of draggable links", () => {
    const root = document.createElement("div");
    renderMatrix(root, buildEntries());
    const rows = root.querySelectorAll("tr");
    expect(rows.length).toBe(9); // header + 8 source rows
    expect(rows[1].querySelectorAll("td").length).toBe(10); // label + 9 targets
    const links = root.querySelectorAll("a");
    expect(links.length).toBe(72);
    for (const link of links) {
      expect(link.getAttribute("href")!.startsWith("javascript:")).toBe(true);
    }
  });

  it("rdfa to n3 cell carries the canonical bookmarklet code", () => {
    const root = document.createElement("div");
    renderMatrix(root, buildEntries("http://svc.example"));
    const link = [...root.querySelectorAll("a")].find((a) =>
      a.getAttribute("href")!.includes("/convert/rdfa/n3/html/")
    )!;
    expect(link.getAttribute("href")).toBe(
      "javascript:location.href='http://svc.example/convert/rdfa/n3/html/'" +
        "+encodeURIComponent(location.href);"
    );
  });

  it("every cell resolves against the configured service base", () => {
    const root = document.createElement("div");
    renderMatrix(root, buildEntries("http://configured.example"));
    for (const link of root.querySelectorAll("a")) {
      expect(link.getAttribute("href")).toContain("http://configured.example/convert/");
    }
  });
});

describe("fetchMatrix", () => {
  it("requests the documented endpoint", async () => {
    const entries = buildEntries();
    const fetchMock = vi.fn(async () => new Response(JSON.stringify(entries)));
    vi.stubGlobal("fetch", fetchMock);
    const got = await fetchMatrix("http://svc.example");
    expect(fetchMock).toHaveBeenCalledWith("http://svc.example/bookmarklets.json");
    expect(got.length).toBe(72);
  });
});
