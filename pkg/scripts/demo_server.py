#!/usr/bin/env python3
"""Serve the suggestion API (and the web UI if built) over a generated or
user-supplied dictionary."""

import argparse
import os
import sys

sys.path.insert(0, "src")

from lexis.service import ServiceConfig, run
from lexis.textcore import Lexicon, load_dictionary_file
from lexis.wordgen import generate_scored_lexicon

DEFAULT_STATIC = os.path.join(os.path.dirname(__file__), "..", "frontend", "dist")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dict", help="dictionary file; default: generated 50k")
    ap.add_argument("--count", type=int, default=50_000)
    ap.add_argument("--host", default="127.0.0.1")
    ap.add_argument("--port", type=int, default=8080)
    ap.add_argument("--static", default=DEFAULT_STATIC)
    args = ap.parse_args()

    if args.dict:
        lexicon = load_dictionary_file(args.dict)
    else:
        words, scores = generate_scored_lexicon(args.count, seed=1)
        lexicon = Lexicon.from_words(words, scores)
    static = args.static if os.path.isdir(args.static) else None
    if static is None:
        print("web UI not built (frontend/dist missing); API only",
              file=sys.stderr)
    config = ServiceConfig(host=args.host, port=args.port, static_dir=static)
    print(f"http://{args.host}:{args.port}/  ({lexicon.d} words)",
          file=sys.stderr)
    run(config, lexicon)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
