#!/usr/bin/env python3
"""Write a deterministic English-like dictionary file, one word per line,
with optional '#score' suffixes."""

import argparse
import sys

sys.path.insert(0, "src")

from lexis.wordgen import generate_lexicon, generate_scored_lexicon


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", help="output path")
    ap.add_argument("--count", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--scores", action="store_true",
                    help="append Zipf-flavored '#score' suffixes")
    args = ap.parse_args()
    if args.scores:
        words, scores = generate_scored_lexicon(args.count, args.seed)
        lines = (f"{w}#{s}" if s else w for w, s in zip(words, scores))
    else:
        lines = iter(generate_lexicon(args.count, args.seed))
    with open(args.out, "w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(line + "\n")
    print(f"wrote {args.count} words to {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
