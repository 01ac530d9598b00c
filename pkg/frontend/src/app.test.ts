import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { App, SuggestResponse, Suggestion } from "./app";

const LEXICON: Array<[string, number]> = [
  ["abcd", 10],
  ["abce", 7],
  ["abcdefg", 5],
];

function rank(q: string): Suggestion[] {
  const exact = LEXICON.filter(([w]) => w.startsWith(q));
  const approx = LEXICON.filter(
    ([w]) => !w.startsWith(q) && withinOneEditOfPrefix(q, w),
  );
  const order = (rows: Array<[string, number]>, isExact: boolean) =>
    rows
      .sort((a, b) => b[1] - a[1] || (a[0] < b[0] ? -1 : 1))
      .map(([word, score]) => ({ word, score, exact: isExact }));
  return [...order(exact, true), ...order(approx, false)];
}

function withinOneEditOfPrefix(q: string, w: string): boolean {
  // tiny oracle good enough for the fixture lexicon
  for (let j = 0; j <= w.length; j++) {
    if (editDistance(q, w.slice(0, j)) <= 1) return true;
  }
  return false;
}

function editDistance(a: string, b: string): number {
  const dp = Array.from({ length: a.length + 1 }, (_, i) => [i]);
  for (let j = 1; j <= b.length; j++) dp[0][j] = j;
  for (let i = 1; i <= a.length; i++) {
    for (let j = 1; j <= b.length; j++) {
      dp[i][j] =
        a[i - 1] === b[j - 1]
          ? dp[i - 1][j - 1]
          : 1 + Math.min(dp[i - 1][j], dp[i][j - 1], dp[i - 1][j - 1]);
    }
  }
  return dp[a.length][b.length];
}

function jsonResponse(body: unknown, status = 200): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => body,
  } as Response;
}

interface FakeBackend {
  fetch: typeof fetch;
  calls: string[];
  selected: string[];
  scores: Map<string, number>;
  fail: boolean;
}

function makeBackend(): FakeBackend {
  const backend: FakeBackend = {
    calls: [],
    selected: [],
    scores: new Map(LEXICON.map(([w, s]) => [w, s])),
    fail: false,
    fetch: (async (input: RequestInfo | URL, init?: RequestInit) => {
      const url = String(input);
      backend.calls.push(url);
      if (backend.fail) throw new TypeError("network down");
      if (url.includes("/select")) {
        const body = JSON.parse(String(init?.body)) as { word: string };
        if (!backend.scores.has(body.word)) {
          return jsonResponse({ error: "unknown" }, 404);
        }
        backend.scores.set(body.word, backend.scores.get(body.word)! + 1);
        backend.selected.push(body.word);
        return jsonResponse({ ok: true });
      }
      const u = new URL(url, "http://test");
      const q = u.searchParams.get("q") ?? "";
      const k = Number(u.searchParams.get("k") ?? "10");
      const page = Number(u.searchParams.get("page") ?? "0");
      const rows = rank(q).map((s) => ({
        ...s,
        score: backend.scores.get(s.word)!,
      }));
      const resorted = [
        ...rows.filter((s) => s.exact),
        ...rows.filter((s) => !s.exact),
      ].sort((a, b) =>
        a.exact !== b.exact
          ? a.exact
            ? -1
            : 1
          : b.score - a.score || (a.word < b.word ? -1 : 1),
      );
      const body: SuggestResponse = {
        query: q,
        k,
        suggestions: resorted.slice(page * k, (page + 1) * k),
        has_more: resorted.length > (page + 1) * k,
        took_us: 42,
      };
      return jsonResponse(body);
    }) as typeof fetch,
  };
  return backend;
}

function mount(): void {
  document.body.innerHTML = `
    <input id="q">
    <span id="latency"></span>
    <ul id="suggestions"></ul>
    <button id="next" hidden>next</button>
    <div id="toast" hidden></div>`;
}

function type(text: string): void {
  const input = document.querySelector<HTMLInputElement>("#q")!;
  input.value = text;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

function key(k: string, ctrl = false): void {
  const input = document.querySelector<HTMLInputElement>("#q")!;
  input.dispatchEvent(
    new KeyboardEvent("keydown", { key: k, ctrlKey: ctrl, bubbles: true }),
  );
}

function renderedWords(): string[] {
  return [...document.querySelectorAll("#suggestions li .word")].map(
    (el) => el.textContent ?? "",
  );
}

async function settle(ms = 200): Promise<void> {
  await vi.advanceTimersByTimeAsync(ms);
}

describe("suggestion box", () => {
  let backend: FakeBackend;

  beforeEach(() => {
    vi.useFakeTimers();
    mount();
    backend = makeBackend();
    new App(document, { k: 2, fetchImpl: backend.fetch, debounceMs: 120 });
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("renders exact completions for the example lexicon", async () => {
    type("abc");
    await settle();
    expect(renderedWords()).toEqual(["abcd", "abce"]);
    const rows = [...document.querySelectorAll("#suggestions li")];
    expect(rows.map((r) => r.className)).toEqual(["exact", "exact"]);
    expect(document.querySelector("#latency")!.textContent).toContain("µs");
  });

  it("distinguishes approximate rows visually", async () => {
    type("abx");
    await settle();
    const rows = [...document.querySelectorAll("#suggestions li")];
    expect(rows.length).toBeGreaterThan(0);
    expect(rows.every((r) => r.classList.contains("approx"))).toBe(true);
  });

  it("empty input clears the list without a request", async () => {
    type("abc");
    await settle();
    const before = backend.calls.length;
    type("");
    await settle();
    expect(backend.calls.length).toBe(before);
    expect(renderedWords()).toEqual([]);
  });

  it("debounces: rapid keystrokes fire one request for the last query", async () => {
    type("a");
    await settle(40);
    type("ab");
    await settle(40);
    type("abc");
    await settle(400);
    expect(backend.calls.length).toBe(1);
    expect(backend.calls[0]).toContain("q=abc");
    expect(renderedWords()).toEqual(["abcd", "abce"]);
  });

  it("next pages group by group and hides when exhausted", async () => {
    type("abc");
    await settle();
    const next = document.querySelector<HTMLButtonElement>("#next")!;
    expect(next.hidden).toBe(false);
    next.click();
    await settle();
    expect(renderedWords()).toEqual(["abcdefg"]);
    expect(next.hidden).toBe(true);
  });

  it("ctrl+ArrowRight is the next-page shortcut", async () => {
    type("abc");
    await settle();
    key("ArrowRight", true);
    await settle();
    expect(renderedWords()).toEqual(["abcdefg"]);
  });

  it("a new keystroke resets the page to 0", async () => {
    type("abc");
    await settle();
    document.querySelector<HTMLButtonElement>("#next")!.click();
    await settle();
    expect(renderedWords()).toEqual(["abcdefg"]);
    type("abcd");
    await settle();
    expect(backend.calls.at(-1)).toContain("page=0");
    expect(renderedWords()).toEqual(["abcd", "abcdefg"]);
  });

  it("arrow keys move the highlight and Enter selects", async () => {
    type("abc");
    await settle();
    key("ArrowDown");
    key("ArrowDown");
    const rows = [...document.querySelectorAll("#suggestions li")];
    expect(rows[1].classList.contains("active")).toBe(true);
    key("Enter");
    await settle();
    expect(document.querySelector<HTMLInputElement>("#q")!.value).toBe("abce");
    expect(backend.selected).toEqual(["abce"]);
  });

  it("click selects like Enter does", async () => {
    type("abc");
    await settle();
    const row = document.querySelectorAll<HTMLLIElement>("#suggestions li")[0];
    row.click();
    await settle();
    expect(document.querySelector<HTMLInputElement>("#q")!.value).toBe("abcd");
    expect(backend.selected).toEqual(["abcd"]);
  });

  it("repeated selections promote the word on the next identical query", async () => {
    type("abc");
    await settle();
    for (let i = 0; i < 4; i++) {
      key("ArrowDown");
      key("ArrowDown");
      key("Enter");
      await settle();
      type("abc");
      await settle();
    }
    expect(renderedWords()[0]).toBe("abce"); // score 11 beats 10 now
  });

  it("selecting an unknown word shows a toast and keeps state", async () => {
    type("abc");
    await settle();
    const app = new App(document, { k: 2, fetchImpl: backend.fetch });
    await app.onSelect("ghost");
    await settle();
    const toast = document.querySelector<HTMLElement>("#toast")!;
    expect(toast.hidden).toBe(false);
    expect(toast.textContent).toContain("ghost");
  });

  it("network failure renders an inline error row, input untouched", async () => {
    backend.fail = true;
    type("abc");
    await settle();
    const rows = [...document.querySelectorAll("#suggestions li")];
    expect(rows).toHaveLength(1);
    expect(rows[0].className).toBe("error");
    expect(document.querySelector<HTMLInputElement>("#q")!.value).toBe("abc");
  });

  it("rendered order always equals response order", async () => {
    type("ab");
    await settle();
    const resp = rank("ab");
    expect(renderedWords()).toEqual(resp.slice(0, 2).map((s) => s.word));
  });
});

describe("stale responses", () => {
  beforeEach(() => {
    vi.useFakeTimers();
    mount();
  });
  afterEach(() => vi.useRealTimers());

  it("only the latest query's response renders", async () => {
    const resolvers: Array<(r: Response) => void> = [];
    const gated: typeof fetch = ((input: RequestInfo | URL) => {
      const url = new URL(String(input), "http://t");
      const q = url.searchParams.get("q") ?? "";
      return new Promise<Response>((resolve) => {
        resolvers.push(() =>
          resolve(
            jsonResponse({
              query: q,
              k: 2,
              suggestions: [{ word: `${q}-result`, score: 1, exact: true }],
              has_more: false,
              took_us: 1,
            }),
          ),
        );
      });
    }) as typeof fetch;
    new App(document, { k: 2, fetchImpl: gated, debounceMs: 10 });
    type("first");
    await settle(20); // request 1 in flight
    type("second");
    await settle(20); // queued as pending behind request 1
    expect(resolvers.length).toBe(1);
    resolvers[0](undefined as never); // resolve request 1 -> fires pending
    await settle(20);
    expect(resolvers.length).toBe(2);
    resolvers[1](undefined as never);
    await settle(20);
    expect(renderedWords()).toEqual(["second-result"]);
  });
});
