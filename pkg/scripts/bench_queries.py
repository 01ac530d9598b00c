#!/usr/bin/env python3
"""Timing sweep over the search methods, mirroring the microbenchmark
protocol: random lexicon words with injected edits, averaged per method
and prefix length. Prints CSV to stdout."""

import argparse
import random
import sys
import time

sys.path.insert(0, "src")

from lexis.index import SEARCH_METHODS, SearchIndex
from lexis.textcore import Lexicon, load_dictionary_file
from lexis.wordgen import generate_scored_lexicon


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dict", help="dictionary file; default: generated 200k")
    ap.add_argument("--count", type=int, default=200_000)
    ap.add_argument("--queries", type=int, default=1000)
    ap.add_argument("--errors", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--k2", action="store_true", help="include hash_k2")
    args = ap.parse_args()

    if args.dict:
        lex = load_dictionary_file(args.dict)
    else:
        words, scores = generate_scored_lexicon(args.count, args.seed)
        lex = Lexicon.from_words(words, scores)
    print(f"building index over {lex.d} words...", file=sys.stderr)
    t0 = time.perf_counter()
    idx = SearchIndex.build(lex, seed=args.seed, with_level2=args.k2)
    print(f"built in {time.perf_counter() - t0:.2f}s", file=sys.stderr)

    rng = random.Random(args.seed)
    alphabet = lex.alphabet
    queries = []
    for _ in range(args.queries):
        q = rng.choice(lex.words)
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
        queries.append(q)

    methods = [m for m in SEARCH_METHODS if args.k2 or m != "hash_k2"]
    print("method,queries,mean_us")
    for method in methods:
        t0 = time.perf_counter()
        for q in queries:
            idx.search(method, q)
        mean = (time.perf_counter() - t0) / len(queries) * 1e6
        print(f"{method},{len(queries)},{mean:.2f}")

    # approximate autocompletion over short prefixes, per prefix length
    print("complete_len,queries,mean_us")
    for plen in range(2, 7):
        prefs = []
        for _ in range(args.queries):
            w = rng.choice(lex.words)
            if len(w) < plen:
                continue
            p = w[:plen]
            j = rng.randrange(len(p))
            p = p[:j] + rng.choice(alphabet) + p[j + 1:]
            prefs.append(p)
        if not prefs:
            continue
        t0 = time.perf_counter()
        for p in prefs:
            idx.auto.search(p, k=10, err=1)
        mean = (time.perf_counter() - t0) / len(prefs) * 1e6
        print(f"{plen},{len(prefs)},{mean:.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
