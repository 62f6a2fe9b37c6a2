"""Exact computation in free bands (with identity adjoined).

Elements of the free band are represented by words or by deterministic
synchronous acyclic transducers; the package provides equality testing,
multiplication, and short-lex minimal representatives, plus brute-force
oracles for validation and a benchmark/CLI layer.
"""

from .bench import BenchSample, SplitMix64, default_samples, run_bench, write_dat
from .enumeration import enumerate_fb
from .interval import MaximalSubwords, interval_transducer, maximal_subwords
from .minimize import equal_in_free_band, equal_transducers, isomorphic, minimize
from .minword import OverlapCase, classify_case, is_minimal, min_word, normalize
from .multiply import KTable, compute_k, multiply
from .oracles import BudgetExceeded, brute_k, brute_min_word, green_rees_equal
from .transducer import (
    NO_STATE,
    Transducer,
    TransducerBuilder,
    from_fbt,
    levels,
    output,
    realizes,
    step,
    to_dot,
    to_fbt,
    treelike,
    trim,
    validate,
)
from .words import (
    WordFormatError,
    ast,
    circ,
    content,
    f_eval,
    format_word,
    parse_word,
    subword,
)

__version__ = "0.1.0"

__all__ = [
    "BenchSample",
    "BudgetExceeded",
    "KTable",
    "MaximalSubwords",
    "NO_STATE",
    "OverlapCase",
    "SplitMix64",
    "Transducer",
    "TransducerBuilder",
    "WordFormatError",
    "ast",
    "brute_k",
    "brute_min_word",
    "circ",
    "classify_case",
    "compute_k",
    "content",
    "default_samples",
    "enumerate_fb",
    "equal_in_free_band",
    "equal_transducers",
    "f_eval",
    "format_word",
    "from_fbt",
    "green_rees_equal",
    "interval_transducer",
    "is_minimal",
    "isomorphic",
    "levels",
    "maximal_subwords",
    "min_word",
    "minimize",
    "multiply",
    "normalize",
    "output",
    "parse_word",
    "realizes",
    "run_bench",
    "step",
    "subword",
    "to_dot",
    "to_fbt",
    "treelike",
    "trim",
    "validate",
    "write_dat",
]
