/** Pure builders for the service's documented routes. */

import type { SourceFormat, TargetFormat } from "./formats.js";

export type Tab = "uri" | "text";

export interface UiState {
  tab: Tab;
  source: SourceFormat;
  target: TargetFormat;
  uri: string;
  text: string;
}

export interface RequestPlan {
  method: "GET" | "POST";
  url: string;
  body?: URLSearchParams;
}

/** Highlighted-output request for the current form state. */
export function conversionRequest(state: UiState, base = ""): RequestPlan {
  if (state.tab === "uri") {
    return {
      method: "GET",
      url: `${base}/convert/${state.source}/${state.target}/html/${state.uri}`,
    };
  }
  const body = new URLSearchParams();
  body.set("content", state.text);
  return {
    method: "POST",
    url: `${base}/convert/${state.source}/${state.target}/html/content`,
    body,
  };
}

/** Raw-output request (clipboard path). */
export function rawRequest(state: UiState, base = ""): RequestPlan {
  if (state.tab === "uri") {
    return {
      method: "GET",
      url: `${base}/convert/${state.source}/${state.target}/${state.uri}`,
    };
  }
  const body = new URLSearchParams();
  body.set("content", state.text);
  return {
    method: "POST",
    url: `${base}/convert/${state.source}/${state.target}/content`,
    body,
  };
}

export interface ShareLinks {
  html: string;
  raw: string;
}

/**
 * Persistent links for sharing; only URI submissions get them (inline
 * text has no stable address).
 */
export function shareLinks(state: UiState, base = ""): ShareLinks | null {
  if (state.tab !== "uri") return null;
  return {
    html: `${base}/convert/${state.source}/${state.target}/html/${state.uri}`,
    raw: `${base}/convert/${state.source}/${state.target}/${state.uri}`,
  };
}

/** Accepts scheme-less hosts; the service prepends http:// itself. */
export function looksLikeUri(value: string): boolean {
  const v = value.trim();
  if (!v || /\s/.test(v)) return false;
  return /^https?:\/\/\S+/.test(v) || /^[^\s/:]+\.[^\s]+/.test(v);
}

/** Pull the highlighted block out of a standalone /html response page. */
export function extractHighlight(pageHtml: string): string {
  const match = pageHtml.match(/<div class="highlight">[\s\S]*<\/div>/);
  return match ? match[0] : pageHtml;
}
