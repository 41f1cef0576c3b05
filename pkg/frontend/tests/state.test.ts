import { describe, expect, it } from "vitest";

import type { UiState } from "../src/api.js";
import { DEFAULT_STATE, decodeState, encodeState } from "../src/state.js";

describe("state encoding", () => {
  it("round-trips through the URL hash", () => {
    const state: UiState = {
      tab: "uri",
      source: "xml",
      target: "json-ld",
      uri: "http://e/doc?x=1",
      text: "",
    };
    const decoded = decodeState(encodeState(state));
    expect(decoded.tab).toBe("uri");
    expect(decoded.source).toBe("xml");
    expect(decoded.target).toBe("json-ld");
    expect(decoded.uri).toBe("http://e/doc?x=1");
  });

  it("empty hash yields the defaults", () => {
    const state = decodeState("");
    expect(state).toEqual(DEFAULT_STATE);
    expect(state.tab).toBe("uri");
    expect(state.uri.length).toBeGreaterThan(0); // pre-filled example
  });

  it("ignores unknown tokens", () => {
    const state = decodeState("#tab=uri&from=bogus&to=nope");
    expect(state.source).toBe(DEFAULT_STATE.source);
    expect(state.target).toBe(DEFAULT_STATE.target);
  });

  it("text tab state omits the uri parameter", () => {
    const hash = encodeState({ tab: "text", source: "n3", target: "nt", uri: "x", text: "t" });
    expect(hash.includes("uri=")).toBe(false);
    expect(decodeState(hash).tab).toBe("text");
  });
});
