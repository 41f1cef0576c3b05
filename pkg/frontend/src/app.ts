/** The conversion playground: tabs, format selectors, result pane. */

import {
  conversionRequest, extractHighlight, looksLikeUri, rawRequest, shareLinks,
  type UiState,
} from "./api.js";
import { copyText } from "./clipboard.js";
import { EXAMPLES, FORMAT_LABELS, SOURCE_FORMATS, TARGET_FORMATS } from "./formats.js";
import { DEFAULT_STATE, decodeState, encodeState } from "./state.js";

export interface AppOptions {
  /** Service base URL; empty string means same origin. */
  base?: string;
  /** Hash to restore state from (defaults to location.hash). */
  initialHash?: string;
  /** Called after every state change (defaults to location.hash update). */
  onStateChange?: (hash: string) => void;
}

export interface App {
  state: UiState;
  submit: () => Promise<void>;
  copyResult: () => Promise<boolean>;
  root: HTMLElement;
}

function option(value: string, label: string): HTMLOptionElement {
  const el = document.createElement("option");
  el.value = value;
  el.textContent = label;
  return el;
}

export function initApp(root: HTMLElement, options: AppOptions = {}): App {
  const base = options.base ?? "";
  const state: UiState = decodeState(
    options.initialHash ?? (typeof location !== "undefined" ? location.hash : "")
  );

  root.innerHTML = `
    <div class="converter">
      <nav class="tabs">
        <button type="button" class="tab-uri">URI</button>
        <button type="button" class="tab-text">Direct Input</button>
      </nav>
      <form class="inputs">
        <div class="pane pane-uri">
          <input class="uri-input" type="text" spellcheck="false"
                 placeholder="www.example.com/page-with-annotations" />
        </div>
        <div class="pane pane-text">
          <textarea class="text-input" rows="10" spellcheck="false"></textarea>
        </div>
        <div class="controls">
          <label>from <select class="source-select"></select></label>
          <label>to <select class="target-select"></select></label>
          <button type="submit" class="submit">Convert</button>
        </div>
      </form>
      <div class="status" hidden></div>
      <div class="result" hidden></div>
      <div class="result-tools" hidden>
        <button type="button" class="copy" disabled>Copy to clipboard</button>
      </div>
      <div class="share-links" hidden>
        <p>Share this conversion:</p>
        <a class="share-html" target="_blank"></a>
        <a class="share-raw" target="_blank"></a>
      </div>
      <p class="more"><a href="ui/bookmarklets.html">Bookmarklets</a></p>
    </div>
  `;

  const tabUri = root.querySelector<HTMLButtonElement>(".tab-uri")!;
  const tabText = root.querySelector<HTMLButtonElement>(".tab-text")!;
  const paneUri = root.querySelector<HTMLElement>(".pane-uri")!;
  const paneText = root.querySelector<HTMLElement>(".pane-text")!;
  const uriInput = root.querySelector<HTMLInputElement>(".uri-input")!;
  const textInput = root.querySelector<HTMLTextAreaElement>(".text-input")!;
  const sourceSelect = root.querySelector<HTMLSelectElement>(".source-select")!;
  const targetSelect = root.querySelector<HTMLSelectElement>(".target-select")!;
  const form = root.querySelector<HTMLFormElement>("form")!;
  const status = root.querySelector<HTMLElement>(".status")!;
  const result = root.querySelector<HTMLElement>(".result")!;
  const tools = root.querySelector<HTMLElement>(".result-tools")!;
  const copyButton = root.querySelector<HTMLButtonElement>(".copy")!;
  const linksBox = root.querySelector<HTMLElement>(".share-links")!;
  const shareHtml = root.querySelector<HTMLAnchorElement>(".share-html")!;
  const shareRaw = root.querySelector<HTMLAnchorElement>(".share-raw")!;

  sourceSelect.appendChild(option("detect", FORMAT_LABELS["detect"]));
  for (const token of SOURCE_FORMATS) {
    sourceSelect.appendChild(option(token, FORMAT_LABELS[token] ?? token));
  }
  for (const token of TARGET_FORMATS) {
    targetSelect.appendChild(option(token, FORMAT_LABELS[token] ?? token));
  }

  let inFlight: AbortController | null = null;
  let lastSubmitted: UiState | null = null;

  function publishState(): void {
    const hash = encodeState(state);
    if (options.onStateChange) {
      options.onStateChange(hash);
    } else if (typeof history !== "undefined") {
      history.replaceState(null, "", hash);
    }
  }

  function markUriValidity(): void {
    const valid = looksLikeUri(uriInput.value);
    uriInput.classList.toggle("invalid", !valid);
    uriInput.setCustomValidity(valid ? "" : "Enter a URI, e.g. www.example.com/doc");
  }

  function syncView(): void {
    const uriMode = state.tab === "uri";
    tabUri.classList.toggle("active", uriMode);
    tabText.classList.toggle("active", !uriMode);
    paneUri.hidden = !uriMode;
    paneText.hidden = uriMode;
    uriInput.value = state.uri;
    textInput.value = state.text;
    sourceSelect.value = state.source;
    targetSelect.value = state.target;
    markUriValidity();
  }

  function insertExampleIfEmpty(): void {
    if (state.tab !== "text") return;
    // auto-detect has no snippet of its own; seed with one it can sniff
    const snippet = EXAMPLES[state.source] ?? EXAMPLES["n3"];
    if (snippet && !textInput.value.trim()) {
      state.text = snippet;
      textInput.value = snippet;
    }
  }

  async function submit(): Promise<void> {
    if (state.tab === "uri" && !looksLikeUri(state.uri)) {
      markUriValidity();
      return;
    }
    if (state.tab === "text" && !state.text.trim()) {
      return;
    }
    if (inFlight) inFlight.abort();
    const controller = new AbortController();
    inFlight = controller;
    status.hidden = false;
    status.textContent = "Converting…";
    const snapshot: UiState = { ...state };
    const plan = conversionRequest(snapshot, base);
    try {
      const resp = await fetch(plan.url, {
        method: plan.method,
        body: plan.body,
        signal: controller.signal,
      });
      const text = await resp.text();
      if (controller !== inFlight) return; // a newer submission took over
      status.hidden = true;
      result.hidden = false;
      if (!resp.ok) {
        const message = document.createElement("pre");
        message.className = "error";
        message.textContent = text;
        result.replaceChildren(message);
        tools.hidden = true;
        copyButton.disabled = true;
        linksBox.hidden = true;
        lastSubmitted = null;
        return;
      }
      result.innerHTML = extractHighlight(text);
      lastSubmitted = snapshot;
      tools.hidden = false;
      copyButton.disabled = false;
      const links = shareLinks(snapshot, base);
      if (links) {
        shareHtml.href = links.html;
        shareHtml.textContent = "highlighted version";
        shareRaw.href = links.raw;
        shareRaw.textContent = "raw output with media type";
        linksBox.hidden = false;
      } else {
        linksBox.hidden = true;
      }
    } catch (err) {
      if ((err as Error).name === "AbortError") return;
      if (controller !== inFlight) return;
      status.hidden = true;
      result.hidden = false;
      const message = document.createElement("pre");
      message.className = "error";
      message.textContent = `Request failed: ${(err as Error).message}`;
      result.replaceChildren(message);
      tools.hidden = true;
      copyButton.disabled = true;
      linksBox.hidden = true;
      lastSubmitted = null;
    } finally {
      if (controller === inFlight) inFlight = null;
    }
  }

  async function copyResult(): Promise<boolean> {
    if (!lastSubmitted) return false;
    const plan = rawRequest(lastSubmitted, base);
    const resp = await fetch(plan.url, { method: plan.method, body: plan.body });
    if (!resp.ok) return false;
    return copyText(await resp.text());
  }

  tabUri.addEventListener("click", () => {
    state.tab = "uri";
    syncView();
    publishState();
  });
  tabText.addEventListener("click", () => {
    state.tab = "text";
    syncView();
    insertExampleIfEmpty();
    publishState();
  });
  uriInput.addEventListener("input", () => {
    state.uri = uriInput.value;
    markUriValidity();
    publishState();
  });
  textInput.addEventListener("input", () => {
    state.text = textInput.value;
  });
  sourceSelect.addEventListener("change", () => {
    state.source = sourceSelect.value as UiState["source"];
    if (state.tab === "text") {
      const snippet = EXAMPLES[state.source];
      if (snippet) {
        state.text = snippet;
        textInput.value = snippet;
      }
    }
    publishState();
  });
  targetSelect.addEventListener("change", () => {
    state.target = targetSelect.value as UiState["target"];
    publishState();
  });

  // Return anywhere in the form (URI field, selectors) triggers conversion
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void submit();
  });
  for (const el of [uriInput, sourceSelect, targetSelect]) {
    el.addEventListener("keydown", (event) => {
      if ((event as KeyboardEvent).key === "Enter") {
        event.preventDefault();
        void submit();
      }
    });
  }
  copyButton.addEventListener("click", () => {
    void copyResult();
  });

  syncView();
  if (state.tab === "text") insertExampleIfEmpty();

  return { state, submit, copyResult, root };
}

export { DEFAULT_STATE };
