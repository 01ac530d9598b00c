"""Polynomial rolling hash with O(1) re-hash of one-edit variants.

A word x hashes to sum(x[i] * t**i) mod P over 1-based positions, with
P = 2**32 - 5 (the largest prime below 2**32) and t drawn once per index
build from [1, P-1]. After an O(m) precomputation over a query, the hash
of any word at edit distance one from it follows from a constant number
of modular operations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import PositionError
from .textcore import JOKER

P = 2**32 - 5  # 4294967291


@dataclass(frozen=True)
class PolyHashParams:
    """Hash parameters fixed at index build and persisted with it."""

    t: int
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.t < P:
            raise ValueError("t must lie in [1, P-1]")

    @classmethod
    def generate(cls, seed: int) -> "PolyHashParams":
        rng = random.Random(seed)
        return cls(t=rng.randrange(1, P), seed=seed)


def powers(t: int, upto: int) -> list[int]:
    """[t**0, t**1, ..., t**upto] mod P."""
    out = [1] * (upto + 1)
    for i in range(1, upto + 1):
        out[i] = out[i - 1] * t % P
    return out


def hash_word(word, params: PolyHashParams) -> int:
    """Hash of a word given as str or as a sequence of code points."""
    t = params.t
    h = 0
    if isinstance(word, str):
        tp = 1
        for ch in word:
            tp = tp * t % P
            h = (h + ord(ch) * tp) % P
        return h
    tp = 1
    for cp in word:
        tp = tp * t % P
        h = (h + cp * tp) % P
    return h


@dataclass
class QueryPrecomp:
    """Per-query scratch: powers of t, prefix hashes, suffix hashes.

    At[i] = t**i mod P for i in 0..m+1.
    F[i]  = hash of q[1..i]; F[0] = 0.
    G[i]  = hash of q[i..m] re-based to start at position 1; G[m+1] = 0.
    G is stored with one leading pad slot so G[i] is literal.
    """

    q: list[int]
    At: list[int]
    F: list[int]
    G: list[int]

    @property
    def m(self) -> int:
        return len(self.q)


def precompute(q, params: PolyHashParams) -> QueryPrecomp:
    """O(m) tables enabling O(1) hashes of every one-edit variant of q."""
    cps = [ord(c) for c in q] if isinstance(q, str) else list(q)
    m = len(cps)
    t = params.t
    at = powers(t, m + 1)
    f = [0] * (m + 1)
    for i in range(1, m + 1):
        f[i] = (f[i - 1] + cps[i - 1] * at[i]) % P
    g = [0] * (m + 2)
    for i in range(m, 0, -1):
        g[i] = (g[i + 1] + cps[i - 1]) * t % P
    return QueryPrecomp(q=cps, At=at, F=f, G=g)


def hash_substitute(pre: QueryPrecomp, i: int, c: int = JOKER) -> int:
    """Hash of q with character c at position i (1-based)."""
    if not 1 <= i <= pre.m:
        raise PositionError(f"substitute position {i} outside 1..{pre.m}")
    return (pre.F[i - 1] + (c + pre.G[i + 1]) * pre.At[i]) % P


def hash_insert(pre: QueryPrecomp, i: int, c: int = JOKER) -> int:
    """Hash of q with character c inserted after position i (0 = front)."""
    if not 0 <= i <= pre.m:
        raise PositionError(f"insert position {i} outside 0..{pre.m}")
    return (pre.F[i] + (c + pre.G[i + 1]) * pre.At[i + 1]) % P


def hash_delete(pre: QueryPrecomp, i: int) -> int:
    """Hash of q with the character at position i removed."""
    if pre.m < 1 or not 1 <= i <= pre.m:
        raise PositionError(f"delete position {i} outside 1..{pre.m}")
    return (pre.F[i - 1] + pre.G[i + 1] * pre.At[i - 1]) % P


def hash_replace(h: int, at: list[int], i: int, old: int, new: int) -> int:
    """Hash after changing position i of an already-hashed word from old to new.

    Composes with the one-edit hashes above; used by the two-error search to
    turn a double-joker pattern hash into single-joker and full-word hashes.
    """
    return (h + (new - old) * at[i]) % P


def pick_params(words, seed: int, max_retries: int = 16) -> PolyHashParams:
    """Choose t, re-picking while any two words share a full-word hash.

    Collisions are harmless for correctness (lookups compare words exactly)
    but cost probes, so a few retries are cheap insurance. After the retry
    budget the last candidate is kept.
    """
    return pick_params_hashed(words, seed, max_retries)[0]


def pick_params_hashed(words, seed: int, max_retries: int = 16,
                       ) -> tuple[PolyHashParams, list[int]]:
    """pick_params plus the full-word hashes of the winning parameters,
    so index builders can skip re-hashing every word."""
    rng = random.Random(seed)
    words = list(words)
    max_len = max((len(w) for w in words), default=0)
    d = len(words)
    # past the birthday bound every t collides somewhere; skip the retries
    retries = max_retries if d * (d - 1) < P else 0
    params = None
    for _ in range(retries):
        t = rng.randrange(1, P)
        params = PolyHashParams(t=t, seed=seed)
        at = powers(t, max_len + 1)
        hashes = []
        append = hashes.append
        seen: set[int] = set()
        add = seen.add
        collided = False
        for w in words:
            h = 0
            i = 0
            for c in w:
                i += 1
                h += ord(c) * at[i]
            h %= P
            if h in seen:
                collided = True
                break
            add(h)
            append(h)
        if not collided:
            return params, hashes
    if params is None:
        params = PolyHashParams(t=rng.randrange(1, P), seed=seed)
    at = powers(params.t, max_len + 1)
    hashes = []
    append = hashes.append
    for w in words:
        h = 0
        i = 0
        for c in w:
            i += 1
            h += ord(c) * at[i]
        append(h % P)
    return params, hashes
