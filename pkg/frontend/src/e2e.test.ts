/**
 * End-to-end: the compiled UI logic drives the real Python suggestion
 * service over HTTP with the example three-word lexicon. No browser binary
 * is available in this environment, so jsdom plays the page and node's
 * fetch carries the requests; everything else is the production code path.
 */

import { spawn, ChildProcess } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { App } from "./app";

let proc: ChildProcess | null = null;
let base = "";

async function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const srv = createServer();
    srv.listen(0, "127.0.0.1", () => {
      const addr = srv.address();
      if (addr && typeof addr === "object") {
        const port = addr.port;
        srv.close(() => resolve(port));
      } else {
        reject(new Error("no port"));
      }
    });
  });
}

async function waitHealthy(url: string, timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${url}/health`);
      if (resp.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error("service never became healthy");
}

beforeAll(async () => {
  const dir = mkdtempSync(join(tmpdir(), "lexis-ui-"));
  const dict = join(dir, "words.txt");
  writeFileSync(dict, "abcd#10\nabce#7\nabcdefg#5\n");
  const port = await freePort();
  base = `http://127.0.0.1:${port}`;
  proc = spawn(
    "python3",
    ["-m", "lexis.cli", "serve", "--dict", dict, "--port", String(port)],
    { cwd: join(__dirname, "..", ".."), stdio: "ignore" },
  );
  await waitHealthy(base);
});

afterAll(() => {
  proc?.kill("SIGINT");
});

function mount(): void {
  document.body.innerHTML = `
    <input id="q">
    <span id="latency"></span>
    <ul id="suggestions"></ul>
    <button id="next" hidden>next</button>
    <div id="toast" hidden></div>`;
}

function words(): string[] {
  return [...document.querySelectorAll("#suggestions li .word")].map(
    (el) => el.textContent ?? "",
  );
}

async function typeAndWait(app: App, text: string): Promise<void> {
  const input = document.querySelector<HTMLInputElement>("#q")!;
  input.value = text;
  input.dispatchEvent(new Event("input", { bubbles: true }));
  const deadline = Date.now() + 10_000;
  while (Date.now() < deadline) {
    await new Promise((r) => setTimeout(r, 25));
    const latency = document.querySelector("#latency")!.textContent ?? "";
    if (latency !== "" && words().length >= 0) return;
  }
  throw new Error("no response rendered");
}

describe("UI against the live service", () => {
  it("runs the full demo scenario", async () => {
    mount();
    const app = new App(document, {
      k: 2,
      debounceMs: 10,
      baseUrl: base,
      fetchImpl: fetch,
    });

    // typing "abc" renders the two exact completions
    await typeAndWait(app, "abc");
    expect(words()).toEqual(["abcd", "abce"]);

    // next renders the remaining completion
    const next = document.querySelector<HTMLButtonElement>("#next")!;
    expect(next.hidden).toBe(false);
    next.click();
    const deadline = Date.now() + 10_000;
    while (words().join() !== "abcdefg" && Date.now() < deadline) {
      await new Promise((r) => setTimeout(r, 25));
    }
    expect(words()).toEqual(["abcdefg"]);

    // selecting "abce" four times outscores "abcd" (7+4 > 10)
    for (let i = 0; i < 4; i++) {
      await app.onSelect("abce");
    }
    await typeAndWait(app, "abc");
    expect(words()).toEqual(["abce", "abcd"]);

    // the input now carries the selected word semantics: retype confirms rank
    const row = document.querySelectorAll<HTMLLIElement>("#suggestions li")[0];
    expect(row.classList.contains("exact")).toBe(true);
  }, 60_000);
});
