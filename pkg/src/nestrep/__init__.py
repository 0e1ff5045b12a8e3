"""Nested REPLACE chains over a unary alphabet."""

from .construct import a159860, intro_chain, length_decreasing_chain, reach_sequence, theorem3_chain
from .engine import Chain, Rule, apply_chain, format_chain, parse_chain, replace, translate
from .oracle import MaxM, max_solved, normalize_digit_runs, solves
from .search import SearchBounds, SearchResult, enumerate_chains, find_min_depth, refute_depth, search_depth
from .sqlgen import SqlOptions, emit_sql, evaluate_sql
from .unary import UnaryRule, chain_length_map, image_range, max_reach, rule_length_map

__all__ = [
    "Chain", "Rule", "UnaryRule", "MaxM", "SearchBounds", "SearchResult", "SqlOptions",
    "replace", "translate", "apply_chain", "parse_chain", "format_chain",
    "rule_length_map", "chain_length_map", "image_range", "max_reach",
    "solves", "max_solved", "normalize_digit_runs",
    "enumerate_chains", "search_depth", "find_min_depth", "refute_depth",
    "theorem3_chain", "a159860", "reach_sequence", "length_decreasing_chain", "intro_chain",
    "emit_sql", "evaluate_sql",
]
