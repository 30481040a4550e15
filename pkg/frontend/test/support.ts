// Shared helpers for the view tests: fixture loading, pulling rendered
// values back out of the HTML strings, and a fetch stub that makes any
// network attempt fail loudly (the view tests must run offline).

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const here = dirname(fileURLToPath(import.meta.url));

export const FIXTURES_DIR = join(here, "..", "fixtures");

export function loadFixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES_DIR, `${name}.json`), "utf8")) as T;
}

/** Text of the first <span data-field="name"> in the rendered HTML. */
export function fieldText(html: string, name: string): string {
  const m = html.match(new RegExp(`<span data-field="${name}">([^<]*)</span>`));
  if (!m || m[1] === undefined) {
    throw new Error(`field ${name} not rendered`);
  }
  return m[1];
}

export function attr(tag: string, name: string): string {
  const m = tag.match(new RegExp(`${name}="([^"]*)"`));
  if (!m || m[1] === undefined) {
    throw new Error(`attribute ${name} not found in ${tag}`);
  }
  return m[1];
}

/** All opening tags whose class list contains cls, e.g. matchTags(html, "polygon", "cell"). */
export function matchTags(html: string, element: string, cls: string): string[] {
  const re = new RegExp(`<${element} class="[^"]*\\b${cls}\\b[^"]*"[^>]*>`, "g");
  return html.match(re) ?? [];
}

export function polylinePointsOf(html: string, cls: string): string {
  const tags = matchTags(html, "polyline", cls);
  const tag = tags[0];
  if (!tag) throw new Error(`no <polyline class="${cls}"> rendered`);
  return attr(tag, "points");
}

let realFetch: typeof fetch | null = null;

export function disableNetwork(): void {
  realFetch = globalThis.fetch;
  globalThis.fetch = (() => {
    throw new Error("network access attempted in an offline test");
  }) as typeof fetch;
}

export function restoreNetwork(): void {
  if (realFetch) {
    globalThis.fetch = realFetch;
    realFetch = null;
  }
}
