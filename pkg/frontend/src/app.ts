/**
 * Typeahead demo against the /suggest JSON endpoint.
 *
 * Exact-prefix completions render above approximate ones, arrow keys move
 * the highlight, Enter (or a click) fills the input and feeds the dynamic
 * ranking through /select, and next / Ctrl+ArrowRight pages through the
 * remaining results group by group. Requests are debounced; at most one is
 * in flight and responses for anything but the latest query are dropped.
 */

export interface Suggestion {
  word: string;
  score: number;
  exact: boolean;
}

export interface SuggestResponse {
  query: string;
  k: number;
  suggestions: Suggestion[];
  has_more: boolean;
  took_us: number;
}

export interface AppOptions {
  k?: number;
  err?: 0 | 1;
  debounceMs?: number;
  baseUrl?: string;
  fetchImpl?: typeof fetch;
}

interface UiState {
  query: string;
  page: number;
  response: SuggestResponse | null;
  selected: number;
  inFlightToken: number;
  pending: { query: string; page: number } | null;
}

export class App {
  private input: HTMLInputElement;
  private list: HTMLUListElement;
  private nextBtn: HTMLButtonElement;
  private latency: HTMLElement;
  private toast: HTMLElement;

  private k: number;
  private err: 0 | 1;
  private debounceMs: number;
  private baseUrl: string;
  private fetchImpl: typeof fetch;

  private timer: ReturnType<typeof setTimeout> | null = null;
  private token = 0;
  private state: UiState = {
    query: "",
    page: 0,
    response: null,
    selected: -1,
    inFlightToken: 0,
    pending: null,
  };

  constructor(root: Document | HTMLElement, opts: AppOptions = {}) {
    this.input = must<HTMLInputElement>(root, "#q");
    this.list = must<HTMLUListElement>(root, "#suggestions");
    this.nextBtn = must<HTMLButtonElement>(root, "#next");
    this.latency = must<HTMLElement>(root, "#latency");
    this.toast = must<HTMLElement>(root, "#toast");
    this.k = opts.k ?? 10;
    this.err = opts.err ?? 1;
    this.debounceMs = opts.debounceMs ?? 120;
    this.baseUrl = opts.baseUrl ?? "";
    this.fetchImpl = opts.fetchImpl ?? fetch.bind(globalThis);

    this.input.addEventListener("input", () => this.onInput());
    this.input.addEventListener("keydown", (ev) => this.onKey(ev));
    this.nextBtn.addEventListener("click", () => this.onNext());
    this.render();
  }

  // -- input ----------------------------------------------------------------

  onInput(): void {
    const text = this.input.value.trim();
    this.state.page = 0;
    this.state.selected = -1;
    if (this.timer !== null) clearTimeout(this.timer);
    if (text === "") {
      this.state.query = "";
      this.state.response = null;
      this.render();
      return;
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      this.request(text, 0);
    }, this.debounceMs);
  }

  onKey(ev: KeyboardEvent): void {
    const rows = this.state.response?.suggestions ?? [];
    if (ev.key === "ArrowDown" && rows.length > 0) {
      ev.preventDefault();
      this.state.selected = (this.state.selected + 1) % rows.length;
      this.render();
    } else if (ev.key === "ArrowUp" && rows.length > 0) {
      ev.preventDefault();
      this.state.selected =
        (this.state.selected - 1 + rows.length) % rows.length;
      this.render();
    } else if (ev.key === "Enter") {
      ev.preventDefault();
      const idx = this.state.selected >= 0 ? this.state.selected : 0;
      if (rows[idx]) void this.onSelect(rows[idx].word);
    } else if (ev.key === "ArrowRight" && ev.ctrlKey) {
      ev.preventDefault();
      this.onNext();
    }
  }

  // -- requests ---------------------------------------------------------------

  private request(query: string, page: number): void {
    if (this.state.inFlightToken !== 0) {
      this.state.pending = { query, page };
      return;
    }
    const token = ++this.token;
    this.state.inFlightToken = token;
    const url =
      `${this.baseUrl}/suggest?q=${encodeURIComponent(query)}` +
      `&k=${this.k}&err=${this.err}&page=${page}`;
    this.fetchImpl(url)
      .then(async (resp) => {
        if (!resp.ok) throw new Error(`suggest failed: ${resp.status}`);
        return (await resp.json()) as SuggestResponse;
      })
      .then((body) => {
        this.state.inFlightToken = 0;
        if (this.drainPending()) return;
        if (token !== this.token) return; // stale: a newer query exists
        this.state.query = query;
        this.state.page = page;
        this.state.response = body;
        if (this.state.selected >= body.suggestions.length) {
          this.state.selected = -1;
        }
        this.render();
      })
      .catch(() => {
        this.state.inFlightToken = 0;
        if (this.drainPending()) return;
        if (token !== this.token) return;
        this.state.response = null;
        this.renderError("suggestion service unreachable");
      });
  }

  private drainPending(): boolean {
    const pending = this.state.pending;
    if (pending === null) return false;
    this.state.pending = null;
    this.request(pending.query, pending.page);
    return true;
  }

  async onSelect(word: string): Promise<void> {
    this.input.value = word;
    try {
      const resp = await this.fetchImpl(`${this.baseUrl}/select`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ word }),
      });
      if (resp.status === 404) {
        this.showToast(`"${word}" is not in the dictionary`);
        return;
      }
    } catch {
      this.showToast("select failed: service unreachable");
    }
  }

  onNext(): void {
    const resp = this.state.response;
    if (!resp || !resp.has_more) return;
    this.request(this.state.query, this.state.page + 1);
  }

  // -- rendering ----------------------------------------------------------------

  private render(): void {
    const resp = this.state.response;
    this.list.textContent = "";
    if (resp) {
      resp.suggestions.forEach((s, i) => {
        const li = this.list.ownerDocument.createElement("li");
        li.className = s.exact ? "exact" : "approx";
        if (i === this.state.selected) li.classList.add("active");
        const word = this.list.ownerDocument.createElement("span");
        word.className = "word";
        word.textContent = s.word;
        const score = this.list.ownerDocument.createElement("span");
        score.className = "score";
        score.textContent = String(s.score);
        li.append(word, score);
        li.addEventListener("click", () => void this.onSelect(s.word));
        this.list.appendChild(li);
      });
      this.latency.textContent = `${resp.took_us} µs`;
      this.nextBtn.hidden = !resp.has_more;
    } else {
      this.latency.textContent = "";
      this.nextBtn.hidden = true;
    }
  }

  private renderError(message: string): void {
    this.list.textContent = "";
    const li = this.list.ownerDocument.createElement("li");
    li.className = "error";
    li.textContent = message;
    this.list.appendChild(li);
    this.nextBtn.hidden = true;
  }

  private showToast(message: string): void {
    this.toast.textContent = message;
    this.toast.hidden = false;
    setTimeout(() => {
      this.toast.hidden = true;
    }, 2500);
  }
}

function must<T extends Element>(root: Document | HTMLElement, selector: string): T {
  const el = root.querySelector(selector);
  if (!el) throw new Error(`missing element ${selector}`);
  return el as T;
}

export function initApp(doc: Document, opts: AppOptions = {}): App {
  return new App(doc, opts);
}

declare global {
  interface Window {
    lexisApp?: App;
  }
}

if (typeof window !== "undefined" && typeof document !== "undefined") {
  const boot = () => {
    if (document.querySelector("#q")) {
      window.lexisApp = initApp(document);
    }
  };
  if (document.readyState === "loading") {
    document.addEventListener("DOMContentLoaded", boot);
  } else {
    boot();
  }
}
