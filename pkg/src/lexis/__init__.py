"""Approximate dictionary search and top-k fuzzy autocompletion."""

from .autocomplete import (
    AutocompleteIndex,
    SuggestSession,
    Suggestion,
    SuggestionPage,
    next_page,
    sort_and_lcp,
    topk,
    update_score,
    valid_nodes,
)
from .bidtrie import BidirectionalTrie, trt_ci, trt_cwni, trt_wni
from .hashdict import (
    build_exact,
    build_level2,
    build_subst_lists,
    compact,
    count_k1,
    query_k1,
    query_k2,
)
from .hashkit import PolyHashParams, hash_word, precompute
from .index import SearchIndex
from .textcore import (
    Lexicon,
    damerau,
    hamming,
    levenshtein,
    load_dictionary_file,
    min_prefix_distance,
    oracle_complete,
    oracle_search,
)

__version__ = "0.1.0"
