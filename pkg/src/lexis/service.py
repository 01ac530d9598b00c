"""HTTP JSON suggestion service over a loaded autocompletion index.

Three endpoints: GET /suggest for ranked completions, POST /select to feed
dynamic scores, GET /health for liveness; everything else under / serves
the bundled web UI from a static directory. Reads run concurrently;
/select takes an exclusive writer turn so no request observes a torn score
update. Pagination is stateless: page p recomputes the search and skips
p*k suggestions.
"""

from __future__ import annotations

import json
import logging
import mimetypes
import os
import threading
import time
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .autocomplete import (
    METHOD_SL_3LEVEL,
    METHODS,
    AutocompleteIndex,
    update_score,
)
from .errors import NotFoundError
from .textcore import Lexicon, load_dictionary_file

log = logging.getLogger(__name__)

MAX_K = 100


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8080
    dict_path: str | None = None
    default_k: int = 10
    error_budget: int = 1
    method: str = METHOD_SL_3LEVEL
    static_dir: str | None = None

    def __post_init__(self):
        if self.default_k < 1:
            raise ValueError("default k must be at least 1")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        if self.error_budget not in (0, 1):
            raise ValueError("error budget must be 0 or 1")


class _RWLock:
    """Many readers or one writer."""

    def __init__(self):
        self._cond = threading.Condition()
        self._readers = 0
        self._writer = False

    def acquire_read(self):
        with self._cond:
            while self._writer:
                self._cond.wait()
            self._readers += 1

    def release_read(self):
        with self._cond:
            self._readers -= 1
            if self._readers == 0:
                self._cond.notify_all()

    def acquire_write(self):
        with self._cond:
            while self._writer or self._readers:
                self._cond.wait()
            self._writer = True

    def release_write(self):
        with self._cond:
            self._writer = False
            self._cond.notify_all()


class SuggestService:
    """Index plus the locking and stats the HTTP layer needs."""

    def __init__(self, config: ServiceConfig, lexicon: Lexicon | None = None,
                 index: AutocompleteIndex | None = None):
        self.config = config
        self.lock = _RWLock()
        self.ready = False
        self.index: AutocompleteIndex | None = None
        self.build_ms = 0
        if index is not None:
            self.index = index
            self.ready = True
            return
        path = os.environ.get("LEXIS_DICT", config.dict_path)
        if lexicon is None:
            if path is None:
                raise ValueError("no dictionary configured")
            lexicon = load_dictionary_file(path)
        t0 = time.perf_counter()
        self.index = AutocompleteIndex(lexicon)
        self.build_ms = int((time.perf_counter() - t0) * 1000)
        self.ready = True

    # -- operations ----------------------------------------------------------

    def suggest(self, q: str, k: int, err: int, page: int) -> dict:
        t0 = time.perf_counter()
        self.lock.acquire_read()
        try:
            run_page = self.index.search(q, k * (page + 1) + 1, err,
                                         self.config.method)
            suggestions = run_page.suggestions
        finally:
            self.lock.release_read()
        window = suggestions[page * k: (page + 1) * k]
        has_more = len(suggestions) > (page + 1) * k
        took = int((time.perf_counter() - t0) * 1_000_000)
        return {
            "query": q,
            "k": k,
            "suggestions": [
                {"word": s.word, "score": s.score, "exact": s.exact}
                for s in window
            ],
            "has_more": has_more,
            "took_us": took,
        }

    def select(self, word: str) -> None:
        self.lock.acquire_write()
        try:
            update_score(self.index.trie, word, 1)
        finally:
            self.lock.release_write()

    def dump_scores(self, path) -> None:
        lex = self.index.lexicon
        scores = self.index.trie.word_scores
        with open(path, "w", encoding="utf-8") as fh:
            for w, s in zip(lex.words, scores):
                fh.write(f"{w}#{s}\n" if s else f"{w}\n")


def _make_handler(service: SuggestService):
    static_dir = service.config.static_dir

    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):
            log.debug("%s " + fmt, self.address_string(), *args)

        def _send_json(self, code: int, payload: dict):
            body = json.dumps(payload).encode("utf-8")
            self.send_response(code)
            self.send_header("Content-Type", "application/json; charset=utf-8")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _bad_request(self, message: str):
            self._send_json(400, {"error": message})

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Content-Length", "0")
            self.end_headers()

        # -- GET -------------------------------------------------------------

        def do_GET(self):
            url = urlparse(self.path)
            if url.path == "/suggest":
                self._handle_suggest(url)
            elif url.path == "/health":
                self._handle_health()
            else:
                self._handle_static(url.path)

        def _handle_suggest(self, url):
            if not service.ready:
                self._send_json(503, {"error": "index not ready"})
                return
            qs = parse_qs(url.query)
            q = qs.get("q", [""])[0].strip()
            if not q:
                self._bad_request("missing or empty q")
                return
            try:
                k = int(qs.get("k", [str(service.config.default_k)])[0])
                err = int(qs.get("err", [str(service.config.error_budget)])[0])
                page = int(qs.get("page", ["0"])[0])
            except ValueError:
                self._bad_request("k, err and page must be integers")
                return
            if not 1 <= k <= MAX_K:
                self._bad_request(f"k must be in 1..{MAX_K}")
                return
            if err not in (0, 1):
                self._bad_request("err must be 0 or 1")
                return
            if page < 0:
                self._bad_request("page must be >= 0")
                return
            self._send_json(200, service.suggest(q, k, err, page))

        def _handle_health(self):
            if not service.ready:
                self._send_json(503, {"status": "building"})
                return
            self._send_json(200, {
                "status": "ok",
                "words": service.index.lexicon.d,
                "build_ms": service.build_ms,
            })

        def _handle_static(self, path):
            if static_dir is None:
                self._send_json(404, {"error": "not found"})
                return
            rel = "index.html" if path == "/" else path.lstrip("/")
            full = os.path.realpath(os.path.join(static_dir, rel))
            root = os.path.realpath(static_dir)
            if not full.startswith(root + os.sep) and full != root:
                self._send_json(404, {"error": "not found"})
                return
            if not os.path.isfile(full):
                self._send_json(404, {"error": "not found"})
                return
            ctype = mimetypes.guess_type(full)[0] or "application/octet-stream"
            with open(full, "rb") as fh:
                body = fh.read()
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        # -- POST ------------------------------------------------------------

        def do_POST(self):
            url = urlparse(self.path)
            if url.path != "/select":
                self._send_json(404, {"error": "not found"})
                return
            if not service.ready:
                self._send_json(503, {"error": "index not ready"})
                return
            try:
                length = int(self.headers.get("Content-Length", "0"))
                payload = json.loads(self.rfile.read(length) or b"{}")
                word = payload["word"]
                if not isinstance(word, str):
                    raise TypeError
            except (ValueError, KeyError, TypeError):
                self._bad_request("body must be JSON with a string 'word'")
                return
            try:
                service.select(word)
            except NotFoundError:
                self._send_json(404, {"error": f"unknown word {word!r}"})
                return
            self._send_json(200, {"ok": True, "word": word})

    return Handler


def make_server(config: ServiceConfig, lexicon: Lexicon | None = None,
                index: AutocompleteIndex | None = None,
                ) -> tuple[ThreadingHTTPServer, SuggestService]:
    """Build the index, then bind; requests never wait behind the build."""
    service = SuggestService(config, lexicon, index)
    server = ThreadingHTTPServer((config.host, config.port),
                                 _make_handler(service))
    return server, service


def run(config: ServiceConfig, lexicon: Lexicon | None = None) -> None:
    server, service = make_server(config, lexicon)
    host, port = server.server_address[:2]
    log.info("serving %d words on http://%s:%s/", service.index.lexicon.d,
             host, port)
    try:
        server.serve_forever()
    finally:
        server.server_close()
