/** The drag-to-toolbar conversion matrix, fed by /bookmarklets.json. */

import { FORMAT_LABELS, SOURCE_FORMATS, TARGET_FORMATS } from "./formats.js";

export interface BookmarkletEntry {
  source: string;
  target: string;
  bookmarklet: string;
}

export const MATRIX_SOURCES: readonly string[] = [...SOURCE_FORMATS, "detect"];

export async function fetchMatrix(base = ""): Promise<BookmarkletEntry[]> {
  const resp = await fetch(`${base}/bookmarklets.json`);
  if (!resp.ok) throw new Error(`matrix request failed: ${resp.status}`);
  return (await resp.json()) as BookmarkletEntry[];
}

/** 8 source rows x 9 target columns of draggable javascript: links. */
export function renderMatrix(root: HTMLElement, entries: BookmarkletEntry[]): void {
  const byPair = new Map<string, BookmarkletEntry>();
  for (const entry of entries) {
    byPair.set(`${entry.source}>${entry.target}`, entry);
  }
  const table = document.createElement("table");
  table.className = "bookmarklet-matrix";

  const head = table.insertRow();
  head.insertCell().textContent = "from \\ to";
  for (const target of TARGET_FORMATS) {
    const cell = head.insertCell();
    cell.textContent = FORMAT_LABELS[target] ?? target;
  }

  for (const source of MATRIX_SOURCES) {
    const row = table.insertRow();
    row.insertCell().textContent = FORMAT_LABELS[source] ?? source;
    for (const target of TARGET_FORMATS) {
      const cell = row.insertCell();
      const entry = byPair.get(`${source}>${target}`);
      if (!entry) continue;
      const link = document.createElement("a");
      link.href = entry.bookmarklet;
      link.textContent = `${source} → ${target}`;
      link.title = "Drag me to the bookmarks bar";
      cell.appendChild(link);
    }
  }
  root.replaceChildren(table);
}
