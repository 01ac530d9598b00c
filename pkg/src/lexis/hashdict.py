"""Hash-table approximate dictionary: exact tables, substitution lists,
bit-vector compaction, and the k=1 / k=2 query algorithms.

Layout follows the length-partitioned scheme: words shorter than beta live
in per-length linear-probing tables holding the characters themselves, all
longer words in one table of references into a shared storage. Approximate
lookups are driven by substitution-list dictionaries keyed by the hash of a
word with a joker at the error position(s); every candidate is verified by
an exact comparison, so hash collisions can cost probes but never wrong
results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ._perf import gc_paused
from .errors import CapacityError, CompactedError
from .hashkit import (
    P,
    PolyHashParams,
    hash_delete,
    hash_insert,
    hash_replace,
    hash_substitute,
    hash_word,
    pick_params,
    powers,
    precompute,
)
from .textcore import JOKER, Lexicon

DEFAULT_ALPHA = 0.7
DEFAULT_BETA = 16
DEFAULT_DELTA = 4
MAX_OCCUPANCY = 0.95

PLAIN = "plain"
SIGNED = "signed"


def _capacity(count: int, alpha: float) -> int:
    return math.ceil(count / alpha) if count > 0 else 0


# ---------------------------------------------------------------------------
# bit vector with O(1) rank

class BitRankVector:
    """Bit vector with interleaved partial counts every `delta` 64-bit words."""

    W = 64

    def __init__(self, bits, delta: int = DEFAULT_DELTA):
        self.delta = delta
        self.nbits = len(bits)
        nwords = (self.nbits + self.W - 1) // self.W or 1
        words = [0] * nwords
        for i, b in enumerate(bits):
            if b:
                words[i >> 6] |= 1 << (i & 63)
        self.words = words
        # partial[k] = number of ones strictly before word k*delta
        partial = []
        acc = 0
        for wi in range(nwords):
            if wi % delta == 0:
                partial.append(acc)
            acc += words[wi].bit_count()
        self.partial = partial
        self.total_ones = acc

    def get(self, i: int) -> int:
        return (self.words[i >> 6] >> (i & 63)) & 1

    def rank(self, i: int) -> int:
        """Number of ones in positions [0..i] inclusive."""
        wi = i >> 6
        cnt = self.partial[wi // self.delta]
        for k in range((wi // self.delta) * self.delta, wi):
            cnt += self.words[k].bit_count()
        mask = (1 << ((i & 63) + 1)) - 1
        return cnt + (self.words[wi] & mask).bit_count()

    def space_bits(self) -> int:
        return len(self.words) * self.W + len(self.partial) * self.W


def rank(bv: BitRankVector, i: int) -> int:
    return bv.rank(i)


# ---------------------------------------------------------------------------
# exact dictionary

class ExactDict:
    """Length-partitioned linear-probing tables over the lexicon words."""

    def __init__(self, params: PolyHashParams, alpha: float = DEFAULT_ALPHA,
                 beta: int = DEFAULT_BETA):
        self.params = params
        self.alpha = alpha
        self.beta = beta
        # length -> list of (word, word_id) | None
        self.char_tables: dict[int, list] = {}
        self.counts: dict[int, int] = {}
        self.long_slots: list = []
        self.long_entries: list[tuple[str, int]] = []
        self.long_count = 0
        self.compacted = False

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, lex: Lexicon, params: PolyHashParams,
              alpha: float = DEFAULT_ALPHA, beta: int = DEFAULT_BETA,
              hashes: list[int] | None = None) -> "ExactDict":
        d = cls(params, alpha, beta)
        by_len: dict[int, int] = {}
        n_long = 0
        for w in lex.words:
            if len(w) < beta:
                by_len[len(w)] = by_len.get(len(w), 0) + 1
            else:
                n_long += 1
        for length, count in by_len.items():
            d.char_tables[length] = [None] * _capacity(count, alpha)
            d.counts[length] = 0
        d.long_slots = [None] * _capacity(n_long, alpha)
        # inline hashing and probing: one pass over every word
        t = params.t
        max_len = max((len(w) for w in lex.words), default=0)
        at = powers(t, max_len + 1)
        char_tables = d.char_tables
        counts = d.counts
        long_slots = d.long_slots
        long_entries = d.long_entries
        with gc_paused():
            for wid, w in enumerate(lex.words):
                if hashes is not None:
                    h = hashes[wid]
                else:
                    h = 0
                    i = 0
                    for c in w:
                        i += 1
                        h += ord(c) * at[i]
                    h %= P
                m = len(w)
                if m < beta:
                    table = char_tables[m]
                    size = len(table)
                    pos = h % size
                    while table[pos] is not None:
                        pos += 1
                        if pos == size:
                            pos = 0
                    table[pos] = (w, wid)
                    counts[m] += 1
                else:
                    size = len(long_slots)
                    pos = h % size
                    while long_slots[pos] is not None:
                        pos += 1
                        if pos == size:
                            pos = 0
                    long_slots[pos] = len(long_entries)
                    long_entries.append((w, wid))
                    d.long_count += 1
        return d

    def _place(self, w: str, wid: int) -> None:
        h = hash_word(w, self.params)
        if len(w) < self.beta:
            table = self.char_tables[len(w)]
            t = len(table)
            pos = h % t
            while table[pos] is not None:
                pos = (pos + 1) % t
            table[pos] = (w, wid)
            self.counts[len(w)] += 1
        else:
            t = len(self.long_slots)
            pos = h % t
            while self.long_slots[pos] is not None:
                pos = (pos + 1) % t
            self.long_slots[pos] = len(self.long_entries)
            self.long_entries.append((w, wid))
            self.long_count += 1

    # -- queries -----------------------------------------------------------

    def lookup(self, q: str, h: int):
        """Word id if q is stored, else None. h must be hash_word(q)."""
        m = len(q)
        if m < self.beta:
            table = self.char_tables.get(m)
            if not table:
                return None
            t = len(table)
            pos = h % t
            for _ in range(t):
                slot = table[pos]
                if slot is None:
                    return None
                if slot[0] == q:
                    return slot[1]
                pos = (pos + 1) % t
            return None
        if not self.long_slots:
            return None
        t = len(self.long_slots)
        pos = h % t
        for _ in range(t):
            ref = self.long_slots[pos]
            if ref is None:
                return None
            word, wid = self.long_entries[ref]
            if word == q:
                return wid
            pos = (pos + 1) % t
        return None

    # -- incremental insert --------------------------------------------------

    def insert(self, w: str, wid: int | None = None) -> None:
        """Add one word; duplicate inserts are a no-op."""
        if self.compacted:
            raise CompactedError("cannot insert into a compacted index")
        h = hash_word(w, self.params)
        if self.lookup(w, h) is not None:
            return
        if wid is None:
            wid = sum(self.counts.values()) + self.long_count
        m = len(w)
        if m < self.beta:
            if m not in self.char_tables:
                self.char_tables[m] = [None] * max(2, _capacity(1, self.alpha))
                self.counts[m] = 0
            table = self.char_tables[m]
            if self.counts[m] + 1 > MAX_OCCUPANCY * len(table):
                raise CapacityError(f"length-{m} table past {MAX_OCCUPANCY:.0%} occupancy")
        else:
            if not self.long_slots:
                self.long_slots = [None] * max(2, _capacity(1, self.alpha))
            if self.long_count + 1 > MAX_OCCUPANCY * len(self.long_slots):
                raise CapacityError(f"long-word table past {MAX_OCCUPANCY:.0%} occupancy")
        self._place(w, wid)


def build_exact(lex: Lexicon, params: PolyHashParams, alpha: float = DEFAULT_ALPHA,
                beta: int = DEFAULT_BETA,
                hashes: list[int] | None = None) -> ExactDict:
    return ExactDict.build(lex, params, alpha, beta, hashes)


def lookup_exact(d, q: str, h: int):
    return d.lookup(q, h)


def insert_word(d: ExactDict, w: str, wid: int | None = None) -> None:
    d.insert(w, wid)


# ---------------------------------------------------------------------------
# substitution-list dictionaries

def _signed_table_bytes(n_chars: int, alpha: float) -> int:
    """Byte size of the signed table: pairs of chars share a signature byte,
    rounded up to whole 3-byte blocks."""
    t = math.ceil((n_chars + n_chars / 2) / alpha)
    if t % 3 == 2:
        t += 1
    elif t % 3 == 1:
        t += 2
    return max(t, 3)


class SubstListDict:
    """Characters keyed by the hash of a word with one joker position.

    The plain variant stores one character per cell. The signed variant
    follows the 3-byte block layout (two characters plus two 4-bit hash
    signatures); probing walks character cells in block order and the
    signature filters candidates before any exact verification.
    """

    def __init__(self, variant: str, params: PolyHashParams, n_chars: int,
                 alphabet: list[str], alpha: float = DEFAULT_ALPHA):
        if variant not in (PLAIN, SIGNED):
            raise ValueError(f"unknown variant {variant!r}")
        self.variant = variant
        self.params = params
        self.alpha = alpha
        self.alphabet_cps = [ord(c) for c in alphabet]
        self.sigma = len(self.alphabet_cps)
        self.stored = 0
        if variant == PLAIN:
            self.table_size = max(_capacity(n_chars, alpha), 2)
            self.cells: list = [None] * self.table_size
            self.sigs = None
        else:
            self.table_size = _signed_table_bytes(max(n_chars, 1), alpha)
            ncells = 2 * (self.table_size // 3)
            self.cells = [None] * ncells
            self.sigs = bytearray(ncells)

    # -- cell addressing ----------------------------------------------------

    def _start_cell(self, h: int) -> int:
        if self.variant == PLAIN:
            return h % self.table_size
        pos = h % self.table_size
        if pos % 3 == 1:
            pos += 1
        return 2 * (pos // 3) + (1 if pos % 3 == 2 else 0)

    # -- construction -------------------------------------------------------

    def insert(self, h: int, cp: int) -> None:
        cells = self.cells
        t = len(cells)
        pos = self._start_cell(h)
        while cells[pos] is not None:
            pos = (pos + 1) % t
        cells[pos] = cp
        if self.sigs is not None:
            self.sigs[pos] = h & 0xF
        self.stored += 1

    # -- queries -------------------------------------------------------------

    def get_list(self, h: int) -> list[int]:
        """Candidate characters for the joker in the word hashing to h.

        Probes from the home cell to the first empty one; the signed variant
        keeps only cells whose signature matches the low 4 bits of h. A probe
        that traverses more than sigma cells aborts and falls back to the
        whole observed alphabet.
        """
        cells = self.cells
        t = len(cells)
        pos = self._start_cell(h)
        sig = h & 0xF
        out: list[int] = []
        walked = 0
        while True:
            cp = cells[pos]
            if cp is None:
                return out
            walked += 1
            if walked > self.sigma:
                return list(self.alphabet_cps)
            if self.sigs is None or self.sigs[pos] == sig:
                out.append(cp)
            pos = (pos + 1) % t


def build_subst_lists(lex: Lexicon, params: PolyHashParams, variant: str = PLAIN,
                      alpha: float = DEFAULT_ALPHA) -> SubstListDict:
    """One stored character per (word, position) pair, keyed by joker hash."""
    sld = SubstListDict(variant, params, lex.n, lex.alphabet, alpha)
    t = params.t
    max_len = max((len(w) for w in lex.words), default=0)
    at = powers(t, max_len + 2)
    # the probe loop is inlined: it runs once per character of the lexicon
    cells = sld.cells
    sigs = sld.sigs
    ncells = len(cells)
    signed = sld.variant == SIGNED
    tsize = sld.table_size
    g = [0] * (max_len + 2)
    with gc_paused():
        for w in lex.words:
            cps = [ord(c) for c in w]
            m = len(cps)
            f = 0
            g[m + 1] = 0
            for i in range(m, 0, -1):
                g[i] = (g[i + 1] + cps[i - 1]) * t % P
            for j in range(1, m + 1):
                cj = cps[j - 1]
                h = (f + (JOKER + g[j + 1]) * at[j]) % P
                f = (f + cj * at[j]) % P
                if signed:
                    pos = h % tsize
                    if pos % 3 == 1:
                        pos += 1
                    pos = 2 * (pos // 3) + (1 if pos % 3 == 2 else 0)
                else:
                    pos = h % tsize
                while cells[pos] is not None:
                    pos += 1
                    if pos == ncells:
                        pos = 0
                cells[pos] = cj
                if signed:
                    sigs[pos] = h & 0xF
    sld.stored = lex.n
    return sld


def get_subst_list(sld, h: int, sig=None) -> list[int]:
    return sld.get_list(h)


class SubstListDict2(SubstListDict):
    """Level-2 lists: keyed by the hash of a word with two jokers, storing
    the character of the first joker position."""


def build_level2(lex: Lexicon, params: PolyHashParams, variant: str = PLAIN,
                 alpha: float = DEFAULT_ALPHA) -> SubstListDict2:
    total = sum(len(w) * (len(w) - 1) // 2 for w in lex.words)
    sld2 = SubstListDict2(variant, params, total, lex.alphabet, alpha)
    with gc_paused():
        for w in lex.words:
            pre = precompute(w, params)
            cps = pre.q
            m = len(cps)
            at = pre.At
            for i in range(1, m):
                hi = hash_substitute(pre, i, JOKER)
                for j in range(i + 1, m + 1):
                    hij = hash_replace(hi, at, j, cps[j - 1], JOKER)
                    sld2.insert(hij, cps[i - 1])
    return sld2


# ---------------------------------------------------------------------------
# compacted forms

class CompactExactDict:
    """ExactDict with empties removed; a rank-indexed bit vector maps original
    slot positions to the dense tables."""

    def __init__(self, src: ExactDict, delta: int = DEFAULT_DELTA):
        self.params = src.params
        self.alpha = src.alpha
        self.beta = src.beta
        self.delta = delta
        self.char_tables: dict[int, tuple[BitRankVector, list]] = {}
        for length, table in src.char_tables.items():
            bv = BitRankVector([s is not None for s in table], delta)
            dense = [s for s in table if s is not None]
            self.char_tables[length] = (bv, dense)
        self.long_bv = BitRankVector([s is not None for s in src.long_slots], delta)
        self.long_dense = [src.long_entries[s] for s in src.long_slots if s is not None]
        self.long_size = len(src.long_slots)
        self.sizes = {length: len(t) for length, t in src.char_tables.items()}

    def lookup(self, q: str, h: int):
        m = len(q)
        if m < self.beta:
            entry = self.char_tables.get(m)
            if entry is None:
                return None
            bv, dense = entry
            t = self.sizes[m]
        else:
            bv, dense = self.long_bv, self.long_dense
            t = self.long_size
        if t == 0:
            return None
        pos = h % t
        for _ in range(t):
            if not bv.get(pos):
                return None
            word, wid = dense[bv.rank(pos) - 1]
            if word == q:
                return wid
            pos = (pos + 1) % t
        return None

    def insert(self, w: str, wid: int):
        raise CompactedError("cannot insert into a compacted index")


class CompactSubstListDict:
    """SubstListDict with empties removed, same probe semantics."""

    def __init__(self, src: SubstListDict, delta: int = DEFAULT_DELTA):
        self.variant = src.variant
        self.params = src.params
        self.table_size = src.table_size
        self.sigma = src.sigma
        self.alphabet_cps = list(src.alphabet_cps)
        self.delta = delta
        self.bv = BitRankVector([c is not None for c in src.cells], delta)
        self.dense = [c for c in src.cells if c is not None]
        if src.sigs is not None:
            self.dense_sigs = bytearray(
                src.sigs[i] for i, c in enumerate(src.cells) if c is not None)
        else:
            self.dense_sigs = None
        self.ncells = len(src.cells)

    def _start_cell(self, h: int) -> int:
        if self.variant == PLAIN:
            return h % self.table_size
        pos = h % self.table_size
        if pos % 3 == 1:
            pos += 1
        return 2 * (pos // 3) + (1 if pos % 3 == 2 else 0)

    def get_list(self, h: int) -> list[int]:
        bv = self.bv
        t = self.ncells
        pos = self._start_cell(h)
        sig = h & 0xF
        out: list[int] = []
        walked = 0
        while True:
            if not bv.get(pos):
                return out
            walked += 1
            if walked > self.sigma:
                return list(self.alphabet_cps)
            idx = bv.rank(pos) - 1
            if self.dense_sigs is None or self.dense_sigs[idx] == sig:
                out.append(self.dense[idx])
            pos = (pos + 1) % t

    def insert(self, h: int, cp: int):
        raise CompactedError("cannot insert into a compacted index")


def compact(structure, delta: int = DEFAULT_DELTA):
    """Freeze a built table into its dense, rank-addressed form."""
    if isinstance(structure, ExactDict):
        return CompactExactDict(structure, delta)
    if isinstance(structure, SubstListDict):
        return CompactSubstListDict(structure, delta)
    raise TypeError(f"cannot compact {type(structure).__name__}")


# ---------------------------------------------------------------------------
# query algorithms

def _k1_candidates(ed, sld, q: str, pre) -> set[str]:
    found: set[str] = set()
    m = len(q)
    if ed.lookup(q, pre.F[m]) is not None:
        found.add(q)
    for i in range(1, m + 1):
        hj = hash_substitute(pre, i, JOKER)
        qi = ord(q[i - 1])
        for cp in sld.get_list(hj):
            if cp == qi:
                continue
            cand = q[: i - 1] + chr(cp) + q[i:]
            if ed.lookup(cand, hash_substitute(pre, i, cp)) is not None:
                found.add(cand)
    for i in range(m + 1):
        hj = hash_insert(pre, i, JOKER)
        for cp in sld.get_list(hj):
            cand = q[:i] + chr(cp) + q[i:]
            if ed.lookup(cand, hash_insert(pre, i, cp)) is not None:
                found.add(cand)
    for i in range(1, m + 1):
        cand = q[: i - 1] + q[i:]
        if ed.lookup(cand, hash_delete(pre, i)) is not None:
            found.add(cand)
    return found


def query_k1(ed, sld, q: str) -> set[str]:
    """All lexicon words within edit distance 1 of q."""
    pre = precompute(q, ed.params)
    return _k1_candidates(ed, sld, q, pre)


def count_k1(ed, sld, q: str) -> int:
    """Number of distinct words within distance 1; each word counts once
    even when several edit types reach it."""
    return len(query_k1(ed, sld, q))


def query_k2(ed, sld, sld2, q: str) -> set[str]:
    """All lexicon words within edit distance 2 of q.

    Double substitutions and any pair involving an insertion probe the
    level-2 dictionary with a two-joker pattern, then the level-1 lists for
    the second position. Pairs involving a deletion enumerate the deleted
    position first and rerun the one-error machinery on the shorter word.
    """
    params = ed.params
    found = query_k1(ed, sld, q)
    cps = [ord(c) for c in q]
    m = len(cps)

    first_ops: list[tuple[list[int], int]] = []
    for i in range(1, m + 1):
        e1 = cps.copy()
        e1[i - 1] = JOKER
        first_ops.append((e1, i))
    for p in range(m + 1):
        e1 = cps[:p] + [JOKER] + cps[p:]
        first_ops.append((e1, p + 1))

    for e1, pos1 in first_ops:
        pre1 = precompute(e1, params)
        at = pre1.At
        length = len(e1)
        second: list[tuple[int, int, int]] = []  # (h2, posj, insert_point|-1)
        for j in range(pos1 + 1, length + 1):
            second.append((hash_substitute(pre1, j, JOKER), j, -1))
        for p2 in range(pos1, length + 1):
            second.append((hash_insert(pre1, p2, JOKER), p2 + 1, p2))
        for h2, posj, ins_at in second:
            lst2 = sld2.get_list(h2)
            if not lst2:
                continue
            for c in lst2:
                h1 = hash_replace(h2, at, pos1, JOKER, c)
                for e in sld.get_list(h1):
                    hw = hash_replace(h1, at, posj, JOKER, e)
                    word_cps = e1.copy()
                    word_cps[pos1 - 1] = c
                    if ins_at >= 0:
                        word_cps.insert(ins_at, e)
                    else:
                        word_cps[posj - 1] = e
                    cand = "".join(map(chr, word_cps))
                    if ed.lookup(cand, hw) is not None:
                        found.add(cand)

    for i in range(1, m + 1):
        shorter = q[: i - 1] + q[i:]
        pre_s = precompute(shorter, params)
        found |= _k1_candidates(ed, sld, shorter, pre_s)
    return found
