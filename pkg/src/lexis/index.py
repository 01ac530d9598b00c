"""One object bundling every search structure over a lexicon.

The hash dictionaries, the bidirectional trie, and the autocompletion trie
are built together so the whole index can be constructed, serialized,
reloaded, and queried through a single surface. Loading a serialized index
restores the compacted hash structures bit-for-bit and rebuilds the tries
deterministically from the stored lexicon.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bidtrie, hashdict
from ._perf import gc_paused
from .autocomplete import DEFAULT_PREFIX_DEPTH, AutocompleteIndex
from .errors import ParameterError
from .hashkit import PolyHashParams, pick_params_hashed
from .storage import SavedIndex, load_index, save_index
from .textcore import Lexicon

HASH_K1 = "hash_k1"
HASH_K2 = "hash_k2"
TRT_CI = "trt_ci"
TRT_WNI = "trt_wni"
TRT_CWNI = "trt_cwni"
COMPLETE = "complete"
SEARCH_METHODS = (HASH_K1, HASH_K2, TRT_CI, TRT_WNI, TRT_CWNI)


@dataclass
class SearchIndex:
    lexicon: Lexicon
    params: PolyHashParams
    exact: object
    subst1: object
    subst2: object | None
    tries: bidtrie.BidirectionalTrie
    auto: AutocompleteIndex

    @classmethod
    def build(cls, lex: Lexicon, seed: int = 0,
              alpha: float = hashdict.DEFAULT_ALPHA,
              beta: int = hashdict.DEFAULT_BETA,
              variant: str = hashdict.PLAIN,
              with_level2: bool = True,
              prefix_depth: int = DEFAULT_PREFIX_DEPTH) -> "SearchIndex":
        with gc_paused():
            params, hashes = pick_params_hashed(lex.words, seed=seed)
            exact = hashdict.build_exact(lex, params, alpha, beta, hashes)
            subst1 = hashdict.build_subst_lists(lex, params, variant, alpha)
            subst2 = (
                hashdict.build_level2(lex, params, variant, alpha)
                if with_level2 else None
            )
            tries = bidtrie.build(lex)
            auto = AutocompleteIndex(lex, params, prefix_depth)
        return cls(lex, params, exact, subst1, subst2, tries, auto)

    def compact(self) -> None:
        """Freeze the hash structures into their dense forms."""
        self.exact = hashdict.compact(self.exact)
        self.subst1 = hashdict.compact(self.subst1)
        if self.subst2 is not None:
            self.subst2 = hashdict.compact(self.subst2)

    # -- persistence ---------------------------------------------------------

    def save(self, path) -> None:
        exact, subst1, subst2 = self.exact, self.subst1, self.subst2
        if not isinstance(exact, hashdict.CompactExactDict):
            exact = hashdict.compact(exact)
            subst1 = hashdict.compact(subst1)
            subst2 = hashdict.compact(subst2) if subst2 is not None else None
        save_index(path, self.lexicon, exact, subst1, subst2)

    @classmethod
    def load(cls, path) -> "SearchIndex":
        saved: SavedIndex = load_index(path)
        with gc_paused():
            tries = bidtrie.build(saved.lexicon)
            auto = AutocompleteIndex(saved.lexicon, saved.params)
        return cls(saved.lexicon, saved.params, saved.exact, saved.subst1,
                   saved.subst2, tries, auto)

    # -- queries -------------------------------------------------------------

    def search(self, method: str, q: str) -> set[str]:
        if method == HASH_K1:
            return hashdict.query_k1(self.exact, self.subst1, q)
        if method == HASH_K2:
            if self.subst2 is None:
                raise ParameterError("index was built without level-2 lists")
            return hashdict.query_k2(self.exact, self.subst1, self.subst2, q)
        if method == TRT_CI:
            return bidtrie.trt_ci(self.tries, q)
        if method == TRT_WNI:
            return bidtrie.trt_wni(self.tries, q)
        if method == TRT_CWNI:
            return bidtrie.trt_cwni(self.tries, q)
        raise ParameterError(f"unknown search method {method!r}")
