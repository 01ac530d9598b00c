"""Operator entry point: build and serialize indexes, query them with any
method, benchmark, and launch the HTTP service.

stdout carries data, stderr diagnostics. Exit codes: 0 ok, 1 runtime
failure, 2 usage or input-format error. All randomness sits behind --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import service as service_mod
from .autocomplete import METHOD_SL_3LEVEL, METHODS
from .errors import LexisError, ParseError
from .index import COMPLETE, SEARCH_METHODS, SearchIndex
from .textcore import Lexicon, load_dictionary_file

ALL_METHODS = SEARCH_METHODS + (COMPLETE,)


def _err(msg: str) -> None:
    print(f"lexis: {msg}", file=sys.stderr)


def _load_lexicon(path: str) -> Lexicon:
    try:
        return load_dictionary_file(path)
    except OSError as exc:
        _err(f"cannot read dictionary: {exc}")
        raise SystemExit(1)
    except ParseError as exc:
        _err(f"bad dictionary entry: {exc}")
        raise SystemExit(2)


def _dict_path(args) -> str | None:
    return getattr(args, "dict", None) or os.environ.get("LEXIS_DICT")


def _open_index(args) -> SearchIndex:
    if getattr(args, "index", None):
        try:
            return SearchIndex.load(args.index)
        except OSError as exc:
            _err(f"cannot read index: {exc}")
            raise SystemExit(1)
        except ParseError as exc:
            _err(f"corrupt index: {exc}")
            raise SystemExit(1)
    path = _dict_path(args)
    if not path:
        _err("need --index, --dict, or LEXIS_DICT")
        raise SystemExit(2)
    lex = _load_lexicon(path)
    return SearchIndex.build(lex, seed=args.seed,
                             with_level2=(args.method in ("hash_k2", None)))


# ---------------------------------------------------------------------------
# subcommands

def cmd_build(args) -> int:
    lex = _load_lexicon(args.dict)
    idx = SearchIndex.build(lex, seed=args.seed, variant=args.variant,
                            with_level2=args.k2)
    idx.compact()
    try:
        idx.save(args.out)
    except OSError as exc:
        _err(f"cannot write index: {exc}")
        return 1
    print(f"indexed {lex.d} words ({lex.n} chars) -> {args.out}", file=sys.stderr)
    return 0


def _emit(rows, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows))
    elif fmt == "csv":
        for row in rows:
            print(",".join(str(v) for v in row.values()))
    else:
        for row in rows:
            print("\t".join(str(v) for v in row.values()))


def cmd_query(args) -> int:
    if args.method != COMPLETE and (args.k is not None or args.err is not None):
        _err("-k and --err apply to the complete method only")
        return 2
    idx = _open_index(args)
    if args.all:
        results = {m: idx.search(m, args.query) for m in
                   ("hash_k1", "trt_ci", "trt_wni", "trt_cwni")}
        baseline = results["hash_k1"]
        for m, got in results.items():
            if got != baseline:
                _err(f"method disagreement: {m} differs from hash_k1")
                return 1
        _emit([{"word": w} for w in sorted(baseline)], args.format)
        return 0
    if args.method == COMPLETE:
        k = args.k if args.k is not None else 10
        err = args.err if args.err is not None else 1
        page = idx.auto.search(args.query, k=k, err=err)
        _emit([{"word": s.word, "score": s.score,
                "exact": int(s.exact)} for s in page.suggestions], args.format)
        return 0
    try:
        found = idx.search(args.method, args.query)
    except LexisError as exc:
        _err(str(exc))
        return 1
    _emit([{"word": w} for w in sorted(found)], args.format)
    return 0


def _bench_queries(args, idx: SearchIndex) -> list[str]:
    if args.queries:
        with open(args.queries, encoding="utf-8") as fh:
            return [line.rstrip("\n") for line in fh if line.strip()]
    rng = random.Random(args.seed)
    words = idx.lexicon.words
    alphabet = idx.lexicon.alphabet or ["a"]
    out = []
    for _ in range(args.random):
        q = rng.choice(words)
        for _ in range(args.errors):
            op = rng.choice("sid")
            if op == "s" and q:
                j = rng.randrange(len(q))
                q = q[:j] + rng.choice(alphabet) + q[j + 1:]
            elif op == "i":
                j = rng.randrange(len(q) + 1)
                q = q[:j] + rng.choice(alphabet) + q[j:]
            elif q:
                j = rng.randrange(len(q))
                q = q[:j] + q[j + 1:]
        out.append(q)
    return out


def cmd_bench(args) -> int:
    if not args.queries and not args.random:
        _err("need --queries FILE or --random N")
        return 2
    idx = _open_index(args)
    queries = _bench_queries(args, idx)
    if args.method == COMPLETE:
        def runner(q):
            idx.auto.search(q, k=10, err=1)
    else:
        def runner(q):
            idx.search(args.method, q)
    by_len: dict[int, list[float]] = {}
    for q in queries:
        t0 = time.perf_counter()
        for _ in range(args.reps):
            runner(q)
        dt = (time.perf_counter() - t0) / args.reps * 1e6
        by_len.setdefault(len(q), []).append(dt)
    print("method,query_len,mean_us,p99_us")
    for qlen in sorted(by_len):
        times = sorted(by_len[qlen])
        mean = sum(times) / len(times)
        p99 = times[min(len(times) - 1, int(len(times) * 0.99))]
        print(f"{args.method},{qlen},{mean:.2f},{p99:.2f}")
    return 0


def cmd_serve(args) -> int:
    path = _dict_path(args)
    if not path:
        _err("need --dict or LEXIS_DICT")
        return 2
    try:
        lex = _load_lexicon(path)
        config = service_mod.ServiceConfig(
            host=args.host, port=args.port, dict_path=path,
            default_k=args.k, error_budget=args.err, method=args.method,
            static_dir=args.static)
        server, svc = service_mod.make_server(config, lex)
    except OSError as exc:
        _err(f"cannot serve: {exc}")
        return 1
    host, port = server.server_address[:2]
    print(f"serving {svc.index.lexicon.d} words on http://{host}:{port}/",
          file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
        if args.dump_scores:
            svc.dump_scores(args.dump_scores)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexis",
        description="approximate dictionary search and fuzzy autocompletion")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build and serialize an index")
    p.add_argument("--dict", required=True, help="UTF-8 word list, one per line")
    p.add_argument("--out", required=True, help="output index file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--variant", choices=["plain", "signed"], default="plain",
                   help="substitution-list cell layout")
    p.add_argument("--k2", action="store_true",
                   help="also build the two-error substitution lists")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("query", help="run one query")
    p.add_argument("query")
    p.add_argument("--index", help="serialized index file")
    p.add_argument("--dict", help="dictionary file (built in memory)")
    p.add_argument("--method", choices=list(ALL_METHODS), default="hash_k1")
    p.add_argument("--all", action="store_true",
                   help="run every k=1 method and check they agree")
    p.add_argument("-k", type=int, default=None, help="completions to return")
    p.add_argument("--err", type=int, choices=[0, 1], default=None,
                   help="completion error budget")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(fn=cmd_query)

    p = sub.add_parser("bench", help="time queries, print CSV")
    p.add_argument("--index")
    p.add_argument("--dict")
    p.add_argument("--method", choices=list(ALL_METHODS), default="trt_ci")
    p.add_argument("--queries", help="file with one query per line")
    p.add_argument("--random", type=int, default=0,
                   help="draw this many random lexicon words")
    p.add_argument("--errors", type=int, default=1,
                   help="edits injected into each random query")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("serve", help="run the HTTP suggestion service")
    p.add_argument("--dict", help="dictionary file (or LEXIS_DICT)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("-k", type=int, default=10)
    p.add_argument("--err", type=int, choices=[0, 1], default=1)
    p.add_argument("--method", choices=list(METHODS), default=METHOD_SL_3LEVEL)
    p.add_argument("--static", help="directory with the web UI assets")
    p.add_argument("--dump-scores", help="write word#score lines on shutdown")
    p.set_defaults(fn=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except LexisError as exc:
        _err(str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
