"""Trie + reverse trie search for one edit error, in three variants.

A query with one error splits as exact-prefix + error + exact-suffix. The
prefix is walked in the forward trie, the suffix in the trie over mirrored
words, and candidates at each feasible error position come from either the
intersection of outgoing character sets (TRT_CI), the intersection of leaf
word-number ranges (TRT_WNI), or characters first and numbers second
(TRT_CWNI). All three return identical result sets.
"""

from __future__ import annotations

from ._perf import gc_paused
from .textcore import Lexicon

_EMPTY: dict = {}


class TrieNode:
    __slots__ = ("children", "word_id", "lo", "hi")

    def __init__(self):
        self.children: dict | None = None
        self.word_id: int | None = None
        self.lo = 0
        self.hi = -1

    def child(self, ch: str):
        c = self.children
        return c.get(ch) if c is not None else None

    def out_chars(self):
        c = self.children
        return c.keys() if c is not None else _EMPTY.keys()


class Trie:
    """Character-per-edge trie with word-end markers and left-to-right
    word-number ranges on every node."""

    def __init__(self):
        self.root = TrieNode()
        self.leaf_order: list[int] = []

    def add(self, word: str, wid: int) -> None:
        node = self.root
        for ch in word:
            if node.children is None:
                node.children = {}
            nxt = node.children.get(ch)
            if nxt is None:
                nxt = TrieNode()
                node.children[ch] = nxt
            node = nxt
        node.word_id = wid

    def add_sorted(self, items) -> None:
        """Bulk insert of (word, id) pairs in sorted word order.

        Sorted order guarantees every character past the common prefix with
        the previous word starts a fresh node, so no child lookups happen.
        """
        path: list[TrieNode] = [self.root]
        prev = ""
        node_cls = TrieNode
        append = path.append
        for word, wid in items:
            if word.startswith(prev):
                lcp = len(prev)
            else:
                lcp = 0
                limit = min(len(prev), len(word))
                while lcp < limit and prev[lcp] == word[lcp]:
                    lcp += 1
                del path[lcp + 1:]
            node = path[-1]
            for ch in word[lcp:]:
                nxt = node_cls()
                if node.children is None:
                    node.children = {ch: nxt}
                else:
                    node.children[ch] = nxt
                node = nxt
                append(node)
            node.word_id = wid
            prev = word

    def number_leaves(self) -> None:
        """DFS in sorted-character order; each node's [lo, hi] covers exactly
        the word-end markers of its subtree."""
        order = self.leaf_order
        order.clear()
        stack = [(self.root, False)]
        exit_stack = []
        while stack:
            node, done = stack.pop()
            if done:
                node.hi = len(order) - 1
                continue
            node.lo = len(order)
            if node.word_id is not None:
                order.append(node.word_id)
            stack.append((node, True))
            if node.children:
                for cp in sorted(node.children, reverse=True):
                    stack.append((node.children[cp], False))

    def walk(self, chars) -> tuple[TrieNode, int]:
        """Deepest node reached by matching chars from the root, and the
        number of characters consumed."""
        node = self.root
        depth = 0
        for ch in chars:
            nxt = node.child(ch)
            if nxt is None:
                return node, depth
            node = nxt
            depth += 1
        return node, depth

    def path_nodes(self, chars) -> list[TrieNode]:
        """[root, node after 1 char, ...] up to the deepest match."""
        node = self.root
        nodes = [node]
        for ch in chars:
            nxt = node.child(ch)
            if nxt is None:
                break
            node = nxt
            nodes.append(node)
        return nodes


class BidirectionalTrie:
    def __init__(self, lex: Lexicon):
        self.words = list(lex.words)
        self.d = len(self.words)
        self.forward = Trie()
        self.backward = Trie()
        with gc_paused():
            self.forward.add_sorted(
                sorted((w, wid) for wid, w in enumerate(self.words)))
            self.backward.add_sorted(
                sorted((w[::-1], wid) for wid, w in enumerate(self.words)))
            self.forward.number_leaves()
            self.backward.number_leaves()
        self._scratch = bytearray(self.d)


def build(lex: Lexicon) -> BidirectionalTrie:
    return BidirectionalTrie(lex)


def exact_prefix_walk(trie: Trie, q: str) -> tuple[TrieNode, int]:
    return trie.walk(q)


def intersect_chars(a, b):
    """a ∧ b over character sets; iterates the smaller side."""
    if len(b) < len(a):
        a, b = b, a
    return {c for c in a if c in b}


def intersect_word_numbers(range_a, range_b, scratch: bytearray) -> set[int]:
    """Ids present in both ranges. Marks range A, probes range B, then
    clears only the touched positions so the scratch can be reused."""
    for wid in range_a:
        scratch[wid] = 1
    out = {wid for wid in range_b if scratch[wid]}
    for wid in range_a:
        scratch[wid] = 0
    return out


class OpCounter:
    """Tallies verification work for the complexity-bound tests."""

    __slots__ = ("walks", "steps")

    def __init__(self):
        self.walks = 0
        self.steps = 0


def _verify_forward(node: TrieNode, q: str, start: int, ops) -> int | None:
    """Continue exact matching of q[start:] downward; word id at the end."""
    if ops is not None:
        ops.walks += 1
    for idx in range(start, len(q)):
        if ops is not None:
            ops.steps += 1
        node = node.child(q[idx])
        if node is None:
            return None
    return node.word_id


def _verify_backward(node: TrieNode, q: str, last: int, ops) -> int | None:
    """Continue matching q[last], q[last-1], ... q[0] in the reverse trie."""
    if ops is not None:
        ops.walks += 1
    for idx in range(last, -1, -1):
        if ops is not None:
            ops.steps += 1
        node = node.child(q[idx])
        if node is None:
            return None
    return node.word_id


def _positions(m: int, L: int, R: int):
    """Feasible error positions given the exact prefix/suffix reach."""
    subs = range(max(1, m - R), min(m, L + 1) + 1)
    inserts = range(max(0, m - R), min(m, L) + 1)
    return subs, inserts


def trt_ci(bt: BidirectionalTrie, q: str, ops: OpCounter | None = None) -> set[str]:
    """Character-intersection search: oracle_search(lex, q, 1)."""
    m = len(q)
    fw = bt.forward.path_nodes(q)
    bw = bt.backward.path_nodes(q[::-1])
    L, R = len(fw) - 1, len(bw) - 1
    found: set[int] = set()

    if L == m and fw[m].word_id is not None:
        found.add(fw[m].word_id)

    subs, inserts = _positions(m, L, R)
    for i in subs:
        v, w = fw[i - 1], bw[m - i]
        qi = q[i - 1]
        for c in intersect_chars(v.out_chars(), w.out_chars()):
            if c == qi:
                continue
            if i - 1 > m - i:
                wid = _verify_forward(v.child(c), q, i, ops)
            else:
                wid = _verify_backward(w.child(c), q, i - 2, ops)
            if wid is not None:
                found.add(wid)
        # deletion shares the same error node pair: skip q[i] and verify
        # the shorter remaining side (end depth pins the word length)
        if i - 1 > m - i:
            wid = _verify_forward(v, q, i, ops)
        else:
            wid = _verify_backward(w, q, i - 2, ops)
        if wid is not None:
            found.add(wid)
    for p in inserts:
        v, w = fw[p], bw[m - p]
        for c in intersect_chars(v.out_chars(), w.out_chars()):
            if p > m - p:
                wid = _verify_forward(v.child(c), q, p, ops)
            else:
                wid = _verify_backward(w.child(c), q, p - 1, ops)
            if wid is not None:
                found.add(wid)
    return {bt.words[wid] for wid in found}


def _range_ids(trie: Trie, node: TrieNode):
    return trie.leaf_order[node.lo: node.hi + 1]


def trt_wni(bt: BidirectionalTrie, q: str) -> set[str]:
    """Word-number-intersection search; same contract as trt_ci."""
    m = len(q)
    fw = bt.forward.path_nodes(q)
    bw = bt.backward.path_nodes(q[::-1])
    L, R = len(fw) - 1, len(bw) - 1
    words = bt.words
    scratch = bt._scratch
    found: set[int] = set()

    if L == m and fw[m].word_id is not None:
        found.add(fw[m].word_id)

    subs, inserts = _positions(m, L, R)
    for i in subs:
        common = intersect_word_numbers(
            _range_ids(bt.forward, fw[i - 1]),
            _range_ids(bt.backward, bw[m - i]),
            scratch,
        )
        for wid in common:
            wl = len(words[wid])
            if wl == m or wl == m - 1:  # substitution or deletion shape
                found.add(wid)
    for p in inserts:
        common = intersect_word_numbers(
            _range_ids(bt.forward, fw[p]),
            _range_ids(bt.backward, bw[m - p]),
            scratch,
        )
        for wid in common:
            if len(words[wid]) == m + 1:
                found.add(wid)
    return {words[wid] for wid in found}


def trt_cwni(bt: BidirectionalTrie, q: str) -> set[str]:
    """Hybrid: character intersection selects candidate children, then the
    word-number intersection runs on those children only."""
    m = len(q)
    fw = bt.forward.path_nodes(q)
    bw = bt.backward.path_nodes(q[::-1])
    L, R = len(fw) - 1, len(bw) - 1
    words = bt.words
    scratch = bt._scratch
    found: set[int] = set()

    if L == m and fw[m].word_id is not None:
        found.add(fw[m].word_id)

    subs, inserts = _positions(m, L, R)
    for i in subs:
        v, w = fw[i - 1], bw[m - i]
        for c in intersect_chars(v.out_chars(), w.out_chars()):
            common = intersect_word_numbers(
                _range_ids(bt.forward, v.child(c)),
                _range_ids(bt.backward, w.child(c)),
                scratch,
            )
            for wid in common:
                if len(words[wid]) == m:
                    found.add(wid)
        # deletion has no error character: intersect the pair directly
        common = intersect_word_numbers(
            _range_ids(bt.forward, v),
            _range_ids(bt.backward, w),
            scratch,
        )
        for wid in common:
            if len(words[wid]) == m - 1:
                found.add(wid)
    for p in inserts:
        v, w = fw[p], bw[m - p]
        for c in intersect_chars(v.out_chars(), w.out_chars()):
            common = intersect_word_numbers(
                _range_ids(bt.forward, v.child(c)),
                _range_ids(bt.backward, w.child(c)),
                scratch,
            )
            for wid in common:
                if len(words[wid]) == m + 1:
                    found.add(wid)
    return {words[wid] for wid in found}
