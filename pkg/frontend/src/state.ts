/** Encode the form into the URL hash so reloading restores it. */

import type { UiState } from "./api.js";
import { EXAMPLE_URI, SOURCE_FORMATS, TARGET_FORMATS } from "./formats.js";

export const DEFAULT_STATE: UiState = {
  tab: "uri",
  source: "detect",
  target: "n3",
  uri: EXAMPLE_URI,
  text: "",
};

export function encodeState(state: UiState): string {
  const params = new URLSearchParams();
  params.set("tab", state.tab);
  params.set("from", state.source);
  params.set("to", state.target);
  if (state.tab === "uri" && state.uri) params.set("uri", state.uri);
  return "#" + params.toString();
}

export function decodeState(hash: string): UiState {
  const params = new URLSearchParams(hash.replace(/^#/, ""));
  const state: UiState = { ...DEFAULT_STATE };
  const tab = params.get("tab");
  if (tab === "uri" || tab === "text") state.tab = tab;
  const source = params.get("from");
  if (source === "detect" || (SOURCE_FORMATS as readonly string[]).includes(source ?? "")) {
    state.source = source as UiState["source"];
  }
  const target = params.get("to");
  if ((TARGET_FORMATS as readonly string[]).includes(target ?? "")) {
    state.target = target as UiState["target"];
  }
  const uri = params.get("uri");
  if (uri) state.uri = uri;
  return state;
}
