"""Word model, reference distance functions, and brute-force search oracles.

Everything here is deliberately simple: these functions are the ground truth
the indexed structures are tested against, so they stay independent of any
index machinery. The unit of comparison is the Unicode scalar value (code
point) throughout the package.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import LengthError, ParseError

log = logging.getLogger(__name__)

# Wildcard marking an error position in hashed patterns. Strictly above
# the Unicode range, so it can never collide with input text.
JOKER = 0x110000

# Indexes assume words of at least this many code points; shorter entries
# are rejected at ingestion with a diagnostic.
MIN_WORD_LEN = 2


def validate_word(word: str) -> None:
    """Reject words that break the core invariants (newline, joker range)."""
    if "\n" in word or "\r" in word:
        raise ParseError(f"word contains a line break: {word!r}")
    # chr(JOKER) is unrepresentable in str, so the joker cannot appear;
    # the check documents the invariant for non-str inputs.


@dataclass
class Lexicon:
    """A set of distinct words with one non-negative score per word."""

    words: list[str]
    scores: list[int]

    d: int = field(init=False)
    n: int = field(init=False)
    sigma: int = field(init=False)
    alphabet: list[str] = field(init=False)

    def __post_init__(self):
        if len(self.words) != len(self.scores):
            raise ValueError("words and scores must have the same length")
        self.d = len(self.words)
        self.n = sum(len(w) for w in self.words)
        chars = set()
        for w in self.words:
            chars.update(w)
        self.alphabet = sorted(chars)
        self.sigma = len(self.alphabet)

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return self.d

    @classmethod
    def from_words(cls, words, scores=None, min_len: int = MIN_WORD_LEN) -> "Lexicon":
        """Build a lexicon, skipping duplicates and too-short words with a warning."""
        seen: dict[str, int] = {}
        kept: list[str] = []
        kept_scores: list[int] = []
        words = list(words)
        if scores is None:
            scores = [0] * len(words)
        for w, s in zip(words, scores):
            validate_word(w)
            if len(w) < min_len:
                log.warning("skipping word shorter than %d code points: %r", min_len, w)
                continue
            if w in seen:
                log.warning("skipping duplicate word: %r", w)
                continue
            if s < 0:
                raise ParseError(f"negative score for {w!r}")
            seen[w] = len(kept)
            kept.append(w)
            kept_scores.append(s)
        return cls(kept, kept_scores)


def parse_entry(line: str) -> tuple[str, int]:
    """Split one dictionary line into (word, score).

    The score is the digits after the last '#' that runs to end of line;
    a '#' anywhere else belongs to the word. Missing score means 0.
    """
    line = line.rstrip("\r")
    pos = line.rfind("#")
    if pos != -1:
        suffix = line[pos + 1:]
        if suffix and all(c in "0123456789" for c in suffix):
            return line[:pos], int(suffix)
        if suffix == "":
            raise ParseError(f"trailing '#' with no score digits: {line!r}")
    return line, 0


def load_dictionary_file(path, min_len: int = MIN_WORD_LEN) -> Lexicon:
    """Load a UTF-8 dictionary, one entry per line, optional '#<digits>' score."""
    words: list[str] = []
    scores: list[int] = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n").rstrip("\r")
            if not line:
                continue
            w, s = parse_entry(line)
            words.append(w)
            scores.append(s)
    return Lexicon.from_words(words, scores, min_len=min_len)


def levenshtein(a: str, b: str) -> int:
    """Edit distance with substitution, insertion and deletion, all cost 1."""
    m, n = len(a), len(b)
    if m == 0:
        return n
    if n == 0:
        return m
    prev = list(range(n + 1))
    for i in range(1, m + 1):
        ca = a[i - 1]
        cur = [i] + [0] * n
        for j in range(1, n + 1):
            if ca == b[j - 1]:
                cur[j] = prev[j - 1]
            else:
                cur[j] = 1 + min(prev[j], cur[j - 1], prev[j - 1])
        prev = cur
    return prev[n]


def levenshtein_matrix(a: str, b: str) -> list[list[int]]:
    """Full DP matrix, kept for traceback and debugging in tests."""
    m, n = len(a), len(b)
    mat = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        mat[i][0] = i
    for j in range(n + 1):
        mat[0][j] = j
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if a[i - 1] == b[j - 1]:
                mat[i][j] = mat[i - 1][j - 1]
            else:
                mat[i][j] = 1 + min(mat[i - 1][j], mat[i][j - 1], mat[i - 1][j - 1])
    return mat


def hamming(a: str, b: str) -> int:
    """Substitution-only distance; defined only for equal lengths."""
    if len(a) != len(b):
        raise LengthError(f"hamming needs equal lengths, got {len(a)} and {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def damerau(a: str, b: str) -> int:
    """Levenshtein plus adjacent transposition at cost 1 (oracle only)."""
    m, n = len(a), len(b)
    if m == 0:
        return n
    if n == 0:
        return m
    prev2: list[int] | None = None
    prev = list(range(n + 1))
    for i in range(1, m + 1):
        cur = [i] + [0] * n
        for j in range(1, n + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            best = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
            if (
                prev2 is not None
                and i > 1
                and j > 1
                and a[i - 1] == b[j - 2]
                and a[i - 2] == b[j - 1]
            ):
                best = min(best, prev2[j - 2] + 1)
            cur[j] = best
        prev2, prev = prev, cur
    return prev[n]


def min_prefix_distance(q: str, w: str) -> int:
    """Minimum edit distance between q and any prefix of w.

    Computed from the final DP row: row m holds lev(q, w[:j]) for every j.
    """
    m, n = len(q), len(w)
    if m == 0:
        return 0
    prev = list(range(n + 1))
    for i in range(1, m + 1):
        ca = q[i - 1]
        cur = [i] + [0] * n
        for j in range(1, n + 1):
            if ca == w[j - 1]:
                cur[j] = prev[j - 1]
            else:
                cur[j] = 1 + min(prev[j], cur[j - 1], prev[j - 1])
        prev = cur
    return min(prev)


def oracle_search(lex, q: str, k: int) -> set[str]:
    """Linear-scan ground truth: all words within edit distance k of q.

    The |len(w) - len(q)| <= k prefilter is an exact lower bound on the
    distance, so it never changes the result set.
    """
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    m = len(q)
    out = set()
    for w in lex:
        if abs(len(w) - m) <= k and levenshtein(q, w) <= k:
            out.add(w)
    return out


def oracle_complete(lex, q: str, k_err: int) -> set[str]:
    """Ground truth for autocompletion: words with a prefix within k_err of q."""
    out = set()
    for w in lex:
        if min_prefix_distance(q, w) <= k_err:
            out.add(w)
    return out


def prefix_sum(values) -> list[int]:
    """Running totals of a numeric sequence."""
    out = []
    acc = 0
    for v in values:
        acc += v
        out.append(acc)
    return out
