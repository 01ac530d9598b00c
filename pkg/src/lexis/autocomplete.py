"""Top-k approximate autocompletion over a scored compact trie.

The trie is built in one pass over the lexicographically sorted lexicon
using the longest-common-prefix array, with edges encoded as slices of the
concatenated word text. Every internal node carries the maximum score of
its subtree, which lets a priority queue peel off the best completions
lazily. One spelling error in the typed prefix is tolerated: valid
completion roots are searched naively or through substitution lists built
over the short lexicon prefixes.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from ._perf import gc_paused
from .errors import NotFoundError, ParameterError
from .hashdict import PLAIN, build_subst_lists
from .hashkit import PolyHashParams, hash_insert, hash_substitute, precompute
from .textcore import JOKER, Lexicon

DEFAULT_PREFIX_DEPTH = 6  # substitution lists cover query patterns up to this length
SL_LEVEL_SPLIT = 3        # hybrid method: lists above this depth, naive below

METHOD_NAIVE = "naive"
METHOD_SL = "SL"
METHOD_SL_NODE = "SL_node"
METHOD_SL_3LEVEL = "SL_3level"
METHODS = (METHOD_NAIVE, METHOD_SL, METHOD_SL_NODE, METHOD_SL_3LEVEL)


class CTNode:
    __slots__ = ("depth", "score", "children", "word_id", "parent", "in_off", "in_len")

    def __init__(self, depth: int, parent=None, in_off: int = 0, in_len: int = 0):
        self.depth = depth
        self.score = 0
        self.children: dict[str, "CTNode"] | None = None
        self.word_id: int | None = None
        self.parent = parent
        self.in_off = in_off
        self.in_len = in_len

    def child(self, ch: str):
        c = self.children
        return c.get(ch) if c is not None else None


@dataclass
class Locus:
    """Position where an exact walk stopped: a node, how far into its
    incoming edge (0 = at the node itself), and the matched depth."""

    node: CTNode
    edge_offset: int
    depth: int


def sort_and_lcp(lex: Lexicon) -> tuple[Lexicon, list[int]]:
    """Sorted, deduplicated lexicon plus the longest-common-prefix array.

    Equal words are merged keeping the highest score.
    """
    pairs = sorted(zip(lex.words, lex.scores))
    words: list[str] = []
    scores: list[int] = []
    for w, s in pairs:
        if words and words[-1] == w:
            scores[-1] = max(scores[-1], s)
        else:
            words.append(w)
            scores.append(s)
    lcp = []
    append = lcp.append
    for a, b in zip(words, words[1:]):
        if b.startswith(a):
            append(len(a))
            continue
        k = 0
        limit = min(len(a), len(b))
        while k < limit and a[k] == b[k]:
            k += 1
        append(k)
    return Lexicon(words, scores), lcp


class CompactScoredTrie:
    """Path-compressed trie over the sorted lexicon with max-of-children
    scores; edge labels are (first char -> text offset, length) slices."""

    def __init__(self, lex: Lexicon, lcp: list[int]):
        self.words = lex.words
        self.word_scores = list(lex.scores)
        self.text = "".join(lex.words)
        starts = []
        off = 0
        for w in lex.words:
            starts.append(off)
            off += len(w)
        self.word_starts = starts
        self.root = CTNode(0)
        with gc_paused():
            self._build(lcp)

    # -- construction ------------------------------------------------------

    def _attach_leaf(self, parent: CTNode, wid: int) -> CTNode:
        w = self.words[wid]
        off = self.word_starts[wid] + parent.depth
        leaf = CTNode(len(w), parent, off, len(w) - parent.depth)
        leaf.word_id = wid
        leaf.score = self.word_scores[wid]
        if parent.children is None:
            parent.children = {}
        parent.children[self.text[off]] = leaf
        return leaf

    def _build(self, lcp: list[int]) -> None:
        """Single pass over the sorted words. A node popped off the
        rightmost path is complete, so its score folds into the node it
        lands under; that keeps every internal score the max of its
        subtree without a second traversal."""
        words = self.words
        if not words:
            return
        stack = [self.root, self._attach_leaf(self.root, 0)]
        for i in range(1, len(words)):
            depth = lcp[i - 1]
            last = stack[-1]
            while stack[-1].depth > depth:
                last = stack.pop()
                top = stack[-1]
                if top.score < last.score:
                    top.score = last.score
            top = stack[-1]
            if top.depth < depth:
                # split the edge top -> last at the common-prefix depth
                mid = CTNode(depth, top, last.in_off, depth - top.depth)
                mid.score = last.score
                top.children[self.text[last.in_off]] = mid
                cut = depth - top.depth
                last.in_off += cut
                last.in_len -= cut
                last.parent = mid
                mid.children = {self.text[last.in_off]: last}
                top = mid
                stack.append(mid)
            stack.append(self._attach_leaf(top, i))
        while len(stack) > 1:
            last = stack.pop()
            top = stack[-1]
            if top.score < last.score:
                top.score = last.score

    # -- navigation ---------------------------------------------------------

    def advance(self, node: CTNode, k: int, s: str, start: int):
        """Consume s[start:] from state (node, k); None on mismatch."""
        text = self.text
        for idx in range(start, len(s)):
            c = s[idx]
            if k == 0:
                child = node.children.get(c) if node.children else None
                if child is None:
                    return None
                node = child
                k = 1
            elif text[node.in_off + k] == c:
                k += 1
            else:
                return None
            if k == node.in_len:
                k = 0
        return node, k

    def node_string(self, node: CTNode) -> str:
        parts = []
        while node.parent is not None:
            parts.append(self.text[node.in_off: node.in_off + node.in_len])
            node = node.parent
        return "".join(reversed(parts))


def build_trie(sorted_lex: Lexicon, lcp: list[int]) -> CompactScoredTrie:
    return CompactScoredTrie(sorted_lex, lcp)


def find_locus(trie: CompactScoredTrie, q: str, start: Locus | None = None) -> Locus:
    """Deepest position matching a prefix of q, resuming from a previous
    locus when the caller knows q extends that locus's query."""
    if start is None:
        node, k, depth = trie.root, 0, 0
    else:
        node, k, depth = start.node, start.edge_offset, start.depth
    text = trie.text
    m = len(q)
    while depth < m:
        c = q[depth]
        if k == 0:
            child = node.children.get(c) if node.children else None
            if child is None:
                break
            node = child
            k = 1
        elif text[node.in_off + k] == c:
            k += 1
        else:
            break
        if k == node.in_len:
            k = 0
        depth += 1
    return Locus(node, k, depth)


def _path_states(locus: Locus) -> list[tuple[CTNode, int]]:
    """State (node, edge offset) for every depth 0..locus.depth."""
    out: list = [None] * (locus.depth + 1)
    node, k, depth = locus.node, locus.edge_offset, locus.depth
    while True:
        out[depth] = (node, k)
        if depth == 0:
            break
        if k == 0:
            if node.in_len == 1:
                node = node.parent
            else:
                k = node.in_len - 1
        elif k == 1:
            node = node.parent
            k = 0
        else:
            k -= 1
        depth -= 1
    return out


# ---------------------------------------------------------------------------
# prefix substitution lists

class PrefixSubstDict:
    """Substitution lists over every distinct lexicon prefix of length
    2..max_len, keyed by the hash of the prefix with one joker."""

    def __init__(self, lex: Lexicon, params: PolyHashParams,
                 max_len: int = DEFAULT_PREFIX_DEPTH,
                 lcp: list[int] | None = None):
        self.params = params
        self.max_len = max_len
        if lcp is not None:
            # sorted words: w[:plen] is new exactly when it extends past the
            # common prefix with the previous word
            prefixes = []
            for i, w in enumerate(lex.words):
                top = min(len(w), max_len)
                start = 2 if i == 0 else max(2, lcp[i - 1] + 1)
                for plen in range(start, top + 1):
                    prefixes.append(w[:plen])
            prefixes.sort()
        else:
            seen: set[str] = set()
            for w in lex.words:
                top = min(len(w), max_len)
                for plen in range(2, top + 1):
                    seen.add(w[:plen])
            prefixes = sorted(seen)
        # a prefix set is itself a small lexicon; reuse the list builder
        plex = Lexicon(prefixes, [0] * len(prefixes))
        self.lists = build_subst_lists(plex, params, PLAIN)

    def sub_candidates(self, pre, i: int) -> list[int]:
        return self.lists.get_list(hash_substitute(pre, i, JOKER))

    def ins_candidates(self, pre, i: int) -> list[int]:
        return self.lists.get_list(hash_insert(pre, i, JOKER))


def build_prefix_subst(lex: Lexicon, params: PolyHashParams,
                       max_len: int = DEFAULT_PREFIX_DEPTH,
                       lcp: list[int] | None = None) -> PrefixSubstDict:
    return PrefixSubstDict(lex, params, max_len, lcp)


# ---------------------------------------------------------------------------
# valid completion roots

def _resolve(state) -> CTNode:
    """A locus anywhere on an edge roots the same completions as the edge's
    destination node."""
    return state[0]


def valid_nodes(trie: CompactScoredTrie, psd: PrefixSubstDict | None, q: str,
                method: str = METHOD_NAIVE, locus: Locus | None = None,
                ) -> tuple[Locus | None, list[CTNode]]:
    """Exact-prefix locus (or None) and the approximate valid nodes.

    A node is valid when the string spelled to it is within edit distance
    one of q and no shallower valid node already covers its subtree. The
    four methods differ only in how candidate branches are found; their
    result sets are identical.
    """
    if method not in METHODS:
        raise ParameterError(f"unknown method {method!r}")
    if method != METHOD_NAIVE and psd is None:
        raise ParameterError(f"method {method} needs prefix substitution lists")
    m = len(q)
    if locus is None:
        locus = find_locus(trie, q)
    exact = locus if locus.depth == m else None

    states = _path_states(locus)
    found: dict[int, CTNode] = {}
    pre = precompute(q, psd.params) if psd is not None else None

    def add(state) -> None:
        node = _resolve(state)
        found.setdefault(id(node), node)

    def rebuild(candidate: str) -> None:
        end = trie.advance(trie.root, 0, candidate, 0)
        if end is not None:
            add(end)

    def naive_sub(e: int, node: CTNode, k: int) -> None:
        if k == 0:
            if not node.children:
                return
            skip = q[e]
            for ch, child in node.children.items():
                if ch == skip:
                    continue
                nk = 0 if child.in_len == 1 else 1
                end = trie.advance(child, nk, q, e + 1)
                if end is not None:
                    add(end)
        else:
            if trie.text[node.in_off + k] != q[e]:
                nk = 0 if k + 1 == node.in_len else k + 1
                end = trie.advance(node, nk, q, e + 1)
                if end is not None:
                    add(end)

    def naive_ins(e: int, node: CTNode, k: int) -> None:
        if k == 0:
            if not node.children:
                return
            for child in node.children.values():
                nk = 0 if child.in_len == 1 else 1
                end = trie.advance(child, nk, q, e)
                if end is not None:
                    add(end)
        else:
            nk = 0 if k + 1 == node.in_len else k + 1
            end = trie.advance(node, nk, q, e)
            if end is not None:
                add(end)

    def listed_sub(e: int, node: CTNode, k: int) -> None:
        # pattern: q with a joker at position e+1 (same length as q)
        if not 2 <= m <= (psd.max_len if psd else 0):
            naive_sub(e, node, k)
            return
        cands = psd.sub_candidates(pre, e + 1)
        if k == 0:
            if not node.children:
                return
            skip = q[e]
            for cp in cands:
                ch = chr(cp)
                if ch == skip:
                    continue
                child = node.children.get(ch)
                if child is None:
                    continue
                nk = 0 if child.in_len == 1 else 1
                end = trie.advance(child, nk, q, e + 1)
                if end is not None:
                    add(end)
        else:
            naive_sub(e, node, k)

    def listed_ins(e: int, node: CTNode, k: int) -> None:
        if not 2 <= m + 1 <= (psd.max_len if psd else 0):
            naive_ins(e, node, k)
            return
        cands = psd.ins_candidates(pre, e)
        if k == 0:
            if not node.children:
                return
            seen = set()
            for cp in cands:
                ch = chr(cp)
                if ch in seen:
                    continue
                seen.add(ch)
                child = node.children.get(ch)
                if child is None:
                    continue
                nk = 0 if child.in_len == 1 else 1
                end = trie.advance(child, nk, q, e)
                if end is not None:
                    add(end)
        else:
            naive_ins(e, node, k)

    def sl_rebuild_sub(e: int) -> None:
        if not 2 <= m <= psd.max_len:
            node, k = states[e]
            naive_sub(e, node, k)
            return
        skip = q[e]
        for cp in psd.sub_candidates(pre, e + 1):
            ch = chr(cp)
            if ch != skip:
                rebuild(q[:e] + ch + q[e + 1:])

    def sl_rebuild_ins(e: int) -> None:
        if not 2 <= m + 1 <= psd.max_len:
            node, k = states[e]
            naive_ins(e, node, k)
            return
        for cp in set(psd.ins_candidates(pre, e)):
            rebuild(q[:e] + chr(cp) + q[e:])

    max_e = locus.depth
    for e in range(max_e + 1):
        node, k = states[e]
        # deletion of q[e+1]: no trie character consumed
        if e < m:
            end = trie.advance(node, k, q, e + 1)
            if end is not None:
                add(end)
        if method == METHOD_NAIVE:
            use_lists = False
        elif method == METHOD_SL_3LEVEL:
            use_lists = e < SL_LEVEL_SPLIT
        else:
            use_lists = True
        if method == METHOD_SL and use_lists:
            if e < m:
                sl_rebuild_sub(e)
            sl_rebuild_ins(e)
            continue
        if use_lists:
            if e < m:
                listed_sub(e, node, k)
            listed_ins(e, node, k)
        else:
            if e < m:
                naive_sub(e, node, k)
            naive_ins(e, node, k)

    approx = _prune_covered(list(found.values()), exact)
    return exact, approx


def _prune_covered(nodes: list[CTNode], exact: Locus | None) -> list[CTNode]:
    """Drop valid nodes whose subtree is already covered by another valid
    node above them, or by the exact locus."""
    ids = {id(n) for n in nodes}
    exact_node = exact.node if exact is not None else None
    kept = []
    for n in nodes:
        if exact_node is not None and n is exact_node:
            continue
        a = n.parent
        covered = False
        while a is not None:
            if id(a) in ids:
                covered = True
                break
            a = a.parent
        if covered:
            continue
        # descendants of the exact locus only repeat exact completions
        if exact_node is not None:
            a = n.parent
            while a is not None:
                if a is exact_node:
                    covered = True
                    break
                a = a.parent
        if not covered:
            kept.append(n)
    return kept


# ---------------------------------------------------------------------------
# top-k extraction

@dataclass
class Suggestion:
    word: str
    score: int
    exact: bool


@dataclass
class SuggestionPage:
    suggestions: list[Suggestion]
    has_more: bool
    run: "TopKRun" = field(repr=False, default=None)
    locus: Locus | None = field(repr=False, default=None)


class TopKRun:
    """Retained priority-queue state so further pages continue the same
    search instead of recomputing it."""

    def __init__(self, trie: CompactScoredTrie, exact: Locus | None,
                 approx: list[CTNode]):
        self.trie = trie
        self.heap: list = []
        self.emitted: set[int] = set()
        self.phase_exact = exact is not None
        self.pending = approx
        self._seq = 0
        if exact is not None:
            self._push_node(exact.node)

    def _push_node(self, node: CTNode) -> None:
        self._seq += 1
        heapq.heappush(
            self.heap,
            (-node.score, self.trie.node_string(node), 1, self._seq, node),
        )

    def _enqueue_pending(self) -> None:
        for node in self.pending:
            self._push_node(node)
        self.pending = []

    def pull(self, k: int) -> list[Suggestion]:
        trie = self.trie
        text = trie.text
        out: list[Suggestion] = []
        if not self.phase_exact and self.pending:
            self._enqueue_pending()
        while len(out) < k:
            if not self.heap:
                if self.phase_exact:
                    self.phase_exact = False
                    self._enqueue_pending()
                    if self.heap:
                        continue
                break
            neg, s, kind, _, payload = heapq.heappop(self.heap)
            if kind == 0:
                if payload in self.emitted:
                    continue
                self.emitted.add(payload)
                out.append(Suggestion(s, -neg, self.phase_exact))
                continue
            node = payload
            if node.word_id is not None:
                self._seq += 1
                heapq.heappush(
                    self.heap,
                    (-trie.word_scores[node.word_id], s, 0, self._seq, node.word_id),
                )
            if node.children:
                for child in node.children.values():
                    label = text[child.in_off: child.in_off + child.in_len]
                    self._seq += 1
                    heapq.heappush(
                        self.heap, (-child.score, s + label, 1, self._seq, child)
                    )
        return out

    @property
    def exhausted(self) -> bool:
        return not self.heap and not self.pending


def topk(trie: CompactScoredTrie, valid: tuple[Locus | None, list[CTNode]],
         k: int) -> SuggestionPage:
    """First page of the ranked suggestion list: exact-prefix completions
    first, then approximate ones, score-descending with lexicographic ties,
    each word at most once."""
    if k < 1:
        raise ParameterError("k must be at least 1")
    exact, approx = valid
    run = TopKRun(trie, exact, approx)
    suggestions = run.pull(k)
    return SuggestionPage(suggestions, not run.exhausted, run)


def next_page(page: SuggestionPage, k: int) -> SuggestionPage:
    """Next k suggestions from the retained queue; no recomputation."""
    if k < 1:
        raise ParameterError("k must be at least 1")
    run = page.run
    if run is None or run.exhausted:
        return SuggestionPage([], False, run)
    suggestions = run.pull(k)
    return SuggestionPage(suggestions, not run.exhausted, run)


def update_score(trie: CompactScoredTrie, word: str, delta: int) -> None:
    """Bump a word's score and re-establish the max-score invariant on its
    root path. Single-writer: callers serialize against readers."""
    if delta <= 0:
        raise ParameterError("delta must be a positive integer")
    locus = find_locus(trie, word)
    node = locus.node
    if locus.depth != len(word) or locus.edge_offset != 0 or node.word_id is None:
        raise NotFoundError(f"{word!r} is not in the lexicon")
    trie.word_scores[node.word_id] += delta
    new = trie.word_scores[node.word_id]
    while node is not None:
        if node.score < new:
            node.score = new
        node = node.parent


# ---------------------------------------------------------------------------
# search entry points and sessions

class AutocompleteIndex:
    """Trie plus prefix substitution lists, ready to serve queries."""

    def __init__(self, lex: Lexicon, params: PolyHashParams | None = None,
                 prefix_depth: int = DEFAULT_PREFIX_DEPTH,
                 min_query_len: int = 1):
        with gc_paused():
            sorted_lex, lcp = sort_and_lcp(lex)
            self.lexicon = sorted_lex
            self.trie = build_trie(sorted_lex, lcp)
            self.params = params or PolyHashParams.generate(seed=0)
            self.psd = build_prefix_subst(sorted_lex, self.params,
                                          prefix_depth, lcp)
            self.min_query_len = min_query_len

    def search(self, q: str, k: int = 10, err: int = 1,
               method: str = METHOD_SL_3LEVEL,
               locus: Locus | None = None) -> SuggestionPage:
        if len(q) < self.min_query_len:
            return SuggestionPage([], False, None)
        loc = find_locus(self.trie, q, start=locus)
        if err == 0:
            exact = loc if loc.depth == len(q) else None
            valid = (exact, [])
        else:
            valid = valid_nodes(self.trie, self.psd, q, method, locus=loc)
        page = topk(self.trie, valid, k)
        page.locus = loc
        return page

    def complete_words(self, q: str, err: int = 1,
                       method: str = METHOD_NAIVE) -> set[str]:
        """Unranked completion set; mirrors the oracle's contract."""
        loc = find_locus(self.trie, q)
        exact = loc if loc.depth == len(q) else None
        if err == 0:
            approx: list[CTNode] = []
        else:
            exact, approx = valid_nodes(self.trie, self.psd, q, method, locus=loc)
        out: set[str] = set()
        roots = ([exact.node] if exact is not None else []) + approx
        for root in roots:
            stack = [root]
            while stack:
                node = stack.pop()
                if node.word_id is not None:
                    out.add(self.trie.words[node.word_id])
                if node.children:
                    stack.extend(node.children.values())
        return out


class SuggestSession:
    """Remembers the previous query's locus so typing more characters
    resumes the walk instead of restarting at the root."""

    def __init__(self, index: AutocompleteIndex, k: int = 10, err: int = 1,
                 method: str = METHOD_SL_3LEVEL):
        self.index = index
        self.k = k
        self.err = err
        self.method = method
        self.last_q: str | None = None
        self.last_locus: Locus | None = None

    def search_from_root(self, q: str) -> SuggestionPage:
        page = self.index.search(q, self.k, self.err, self.method)
        self._remember(q, page)
        return page

    def search_end_node(self, q: str) -> SuggestionPage:
        resume = None
        if (
            self.last_q is not None
            and self.last_locus is not None
            and q.startswith(self.last_q)
        ):
            resume = self.last_locus
        page = self.index.search(q, self.k, self.err, self.method, locus=resume)
        self._remember(q, page)
        return page

    def _remember(self, q: str, page: SuggestionPage) -> None:
        self.last_q = q
        self.last_locus = getattr(page, "locus", None)
