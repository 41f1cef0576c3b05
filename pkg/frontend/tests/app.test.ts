// @vitest-environment jsdom
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { initApp } from "../src/app.js";

const NT_LINE =
  "<http://example.org/#a> <http://example.org/#b> <http://example.org/#c> .\n";

const HTML_PAGE = `<!doctype html><html><body>
<div class="highlight"><pre><span class="nt">&lt;http://example.org/#a&gt;</span></pre></div>
</body></html>`;

function pageResponse(): Response {
  return new Response(HTML_PAGE, {
    status: 200,
    headers: { "content-type": "text/html" },
  });
}

let fetchMock: ReturnType<typeof vi.fn>;
let root: HTMLElement;

beforeEach(() => {
  fetchMock = vi.fn(async () => pageResponse());
  vi.stubGlobal("fetch", fetchMock);
  root = document.createElement("div");
  document.body.appendChild(root);
});

afterEach(() => {
  vi.unstubAllGlobals();
  document.body.innerHTML = "";
});

function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

describe("initial render", () => {
  it("starts on the URI tab with a pre-filled example URI", () => {
    const app = initApp(root, { initialHash: "", onStateChange: () => {} });
    expect(root.querySelector(".tab-uri")!.classList.contains("active")).toBe(true);
    const input = root.querySelector<HTMLInputElement>(".uri-input")!;
    expect(input.value.length).toBeGreaterThan(0);
    expect(app.state.tab).toBe("uri");
  });

  it("offers 8 source options and 9 target options", () => {
    initApp(root, { initialHash: "", onStateChange: () => {} });
    expect(root.querySelectorAll(".source-select option").length).toBe(8);
    expect(root.querySelectorAll(".target-select option").length).toBe(9);
  });

  it("restores state from the hash", () => {
    const app = initApp(root, {
      initialHash: "#tab=text&from=xml&to=json-ld",
      onStateChange: () => {},
    });
    expect(app.state.tab).toBe("text");
    expect(app.state.source).toBe("xml");
    expect(app.state.target).toBe("json-ld");
    expect(root.querySelector<HTMLElement>(".pane-text")!.hidden).toBe(false);
  });
});

describe("URI validation", () => {
  it("flags an invalid URI and blocks submission", async () => {
    const app = initApp(root, { initialHash: "", onStateChange: () => {} });
    const input = root.querySelector<HTMLInputElement>(".uri-input")!;
    input.value = "not a uri";
    input.dispatchEvent(new Event("input", { bubbles: true }));
    expect(input.classList.contains("invalid")).toBe(true);
    await app.submit();
    expect(fetchMock).not.toHaveBeenCalled();
  });

  it("clears the flag for a plausible URI", () => {
    initApp(root, { initialHash: "", onStateChange: () => {} });
    const input = root.querySelector<HTMLInputElement>(".uri-input")!;
    input.value = "www.example.com/doc";
    input.dispatchEvent(new Event("input", { bubbles: true }));
    expect(input.classList.contains("invalid")).toBe(false);
  });
});

describe("submission", () => {
  it("return key in the URI field fires the conversion request", async () => {
    initApp(root, {
      initialHash: "#tab=uri&from=xml&to=n3&uri=http://e/doc",
      onStateChange: () => {},
    });
    const input = root.querySelector<HTMLInputElement>(".uri-input")!;
    input.dispatchEvent(new KeyboardEvent("keydown", { key: "Enter", bubbles: true }));
    await flush();
    expect(fetchMock).toHaveBeenCalledTimes(1);
    const [url, init] = fetchMock.mock.calls[0];
    expect(url).toBe("/convert/xml/n3/html/http://e/doc");
    expect(init.method).toBe("GET");
  });

  it("return key in the selectors also submits", async () => {
    initApp(root, {
      initialHash: "#tab=uri&from=xml&to=n3&uri=http://e/doc",
      onStateChange: () => {},
    });
    root.querySelector<HTMLSelectElement>(".target-select")!
      .dispatchEvent(new KeyboardEvent("keydown", { key: "Enter", bubbles: true }));
    await flush();
    expect(fetchMock).toHaveBeenCalledTimes(1);
  });

  it("URI mode success shows exactly two share links", async () => {
    const app = initApp(root, {
      initialHash: "#tab=uri&from=xml&to=n3&uri=http://e/doc",
      onStateChange: () => {},
    });
    await app.submit();
    const box = root.querySelector<HTMLElement>(".share-links")!;
    expect(box.hidden).toBe(false);
    const links = box.querySelectorAll("a");
    expect(links.length).toBe(2);
    expect(links[0].getAttribute("href")).toBe("/convert/xml/n3/html/http://e/doc");
    expect(links[1].getAttribute("href")).toBe("/convert/xml/n3/http://e/doc");
  });

  it("text mode success shows no share links", async () => {
    const app = initApp(root, {
      initialHash: "#tab=text&from=n3&to=nt",
      onStateChange: () => {},
    });
    app.state.text = "@prefix : <http://example.org/#> . :a :b :c .";
    await app.submit();
    expect(root.querySelector<HTMLElement>(".result")!.hidden).toBe(false);
    expect(root.querySelector<HTMLElement>(".share-links")!.hidden).toBe(true);
  });

  it("injects the highlighted block, not the whole page", async () => {
    const app = initApp(root, {
      initialHash: "#tab=uri&from=xml&to=n3&uri=http://e/doc",
      onStateChange: () => {},
    });
    await app.submit();
    const result = root.querySelector<HTMLElement>(".result")!;
    expect(result.querySelector(".highlight")).not.toBeNull();
    expect(result.innerHTML.includes("<body>")).toBe(false);
  });

  it("server errors render the verbose message in the result pane", async () => {
    fetchMock.mockImplementationOnce(async () =>
      new Response("conversion failed: [n3] bad token (line 1, column 5)", { status: 400 })
    );
    const app = initApp(root, {
      initialHash: "#tab=text&from=n3&to=nt",
      onStateChange: () => {},
    });
    app.state.text = ":a :b %% .";
    await app.submit();
    const error = root.querySelector<HTMLElement>(".result .error")!;
    expect(error.textContent).toContain("line 1");
    expect(root.querySelector<HTMLElement>(".share-links")!.hidden).toBe(true);
  });

  it("only documented API routes are requested", async () => {
    const app = initApp(root, {
      initialHash: "#tab=uri&from=detect&to=rdf-json-pretty&uri=www.example.com",
      onStateChange: () => {},
    });
    await app.submit();
    await app.copyResult();
    for (const [url] of fetchMock.mock.calls) {
      expect(String(url)).toMatch(/^\/convert\/[a-z3-]+\/[a-z3-]+(\/html)?\/.+/);
    }
  });
});

describe("text tab examples", () => {
  it("switching to the text tab inserts a working snippet", () => {
    const app = initApp(root, { initialHash: "", onStateChange: () => {} });
    root.querySelector<HTMLButtonElement>(".tab-text")!.click();
    expect(app.state.tab).toBe("text");
    const textarea = root.querySelector<HTMLTextAreaElement>(".text-input")!;
    expect(textarea.value.trim().length).toBeGreaterThan(0);
  });

  it("picking a format replaces the snippet with that format's example", () => {
    initApp(root, { initialHash: "#tab=text&from=n3&to=nt", onStateChange: () => {} });
    const select = root.querySelector<HTMLSelectElement>(".source-select")!;
    select.value = "json-ld";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    const textarea = root.querySelector<HTMLTextAreaElement>(".text-input")!;
    expect(textarea.value).toContain("@context");
  });
});

describe("copy to clipboard", () => {
  it("is disabled before any result exists", () => {
    initApp(root, { initialHash: "", onStateChange: () => {} });
    expect(root.querySelector<HTMLButtonElement>(".copy")!.disabled).toBe(true);
  });

  it("copies the raw (un-highlighted) output", async () => {
    const written: string[] = [];
    vi.stubGlobal("navigator", {
      clipboard: { writeText: async (t: string) => void written.push(t) },
    });
    fetchMock.mockImplementation(async (url: string) =>
      String(url).includes("/html/")
        ? pageResponse()
        : new Response(NT_LINE, { status: 200, headers: { "content-type": "text/plain" } })
    );
    const app = initApp(root, {
      initialHash: "#tab=uri&from=xml&to=nt&uri=http://e/doc",
      onStateChange: () => {},
    });
    await app.submit();
    expect(root.querySelector<HTMLButtonElement>(".copy")!.disabled).toBe(false);
    const ok = await app.copyResult();
    expect(ok).toBe(true);
    expect(written).toEqual([NT_LINE]);
    // the copied text is the raw N-Triples line, reparseable downstream
    expect(written[0]).toMatch(/^<[^>]+> <[^>]+> <[^>]+> \.\n$/);
  });
});

describe("single in-flight conversion", () => {
  it("a second submit aborts the first request", async () => {
    const aborted: boolean[] = [];
    fetchMock.mockImplementation((url: string, init: RequestInit) => {
      const signal = init.signal as AbortSignal;
      return new Promise<Response>((resolve, reject) => {
        const timer = setTimeout(() => resolve(pageResponse()), 30);
        signal.addEventListener("abort", () => {
          clearTimeout(timer);
          aborted.push(true);
          reject(new DOMException("aborted", "AbortError"));
        });
      });
    });
    const app = initApp(root, {
      initialHash: "#tab=uri&from=xml&to=n3&uri=http://e/doc",
      onStateChange: () => {},
    });
    const first = app.submit();
    const second = app.submit();
    await Promise.all([first, second]);
    await flush();
    expect(aborted).toEqual([true]);
    expect(fetchMock).toHaveBeenCalledTimes(2);
  });
});

describe("state publication", () => {
  it("reports an encodable hash on every change", () => {
    const hashes: string[] = [];
    initApp(root, { initialHash: "", onStateChange: (h) => hashes.push(h) });
    const select = root.querySelector<HTMLSelectElement>(".target-select")!;
    select.value = "json-ld";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    expect(hashes.length).toBeGreaterThan(0);
    expect(hashes[hashes.length - 1]).toContain("to=json-ld");
  });
});
