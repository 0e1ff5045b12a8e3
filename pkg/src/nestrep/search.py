"""Exhaustive search over unary chains.

Chains of a fixed depth are enumerated in lexicographic order of their
``(ell, r)`` pairs, innermost rule first. With pruning on, the innermost
rule keeps ``ell <= m`` and ``r >= 1`` (a longer pattern never fires on a
run of length <= m, an empty replacement erases ``1^ell``) and the outermost
rule keeps ``ell >= 2`` and ``r <= 1`` (anything else is redundant or cannot
produce a single ``1``). A depth-1 chain is subject to both.

Two routes compute the same answer:

* :func:`search_depth_naive` walks :func:`enumerate_chains` and calls
  :func:`nestrep.oracle.solves` on each candidate.
* :func:`search_depth` works on sets of run lengths with numpy, memoises
  equal intermediate states and counts skipped subtrees arithmetically. It
  reports the same first chain and the same ``tested`` count as the naive
  walk.

Results only cover the stated bounds on ``ell`` and ``r``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .engine import Chain
from .oracle import solves
from .unary import rule_length_map

_INT64_HEADROOM = 2**62


@dataclass(frozen=True)
class SearchBounds:
    max_ell: int
    max_r: int
    max_depth: int

    def __post_init__(self):
        if self.max_ell < 1 or self.max_r < 0 or self.max_depth < 1:
            raise ValueError(f"invalid search bounds {self}")

    @classmethod
    def default(cls, m: int) -> "SearchBounds":
        return cls(max_ell=2 * m + 2, max_r=2 * m + 2, max_depth=4)

    def __str__(self):
        return f"ell<={self.max_ell},r<={self.max_r},depth<={self.max_depth}"


@dataclass(frozen=True)
class SearchResult:
    kind: str  # "found" or "exhausted"
    depth: int
    bounds: SearchBounds
    tested: int
    chain: Chain | None = field(default=None)

    @property
    def found(self) -> bool:
        return self.kind == "found"

    def record(self) -> str:
        if self.found:
            pairs = ";".join(f"{ell} {r}" for ell, r in self.chain.unary_pairs())
            return f"FOUND depth={self.depth} chain={pairs} tested={self.tested}"
        return f"EXHAUSTED tested={self.tested} bounds={self.bounds} scope=bounded"


def position_options(pos: int, depth: int, m: int, bounds: SearchBounds,
                     prune: bool = True) -> list[tuple[int, int]]:
    """Admissible ``(ell, r)`` pairs for the rule at ``pos`` (0 = innermost)."""
    ell_lo, ell_hi = 1, bounds.max_ell
    r_lo, r_hi = 0, bounds.max_r
    if prune:
        if pos == 0:
            ell_hi = min(ell_hi, m)
            r_lo = 1
        if pos == depth - 1:
            ell_lo = 2
            r_hi = min(r_hi, 1)
    return [(ell, r) for ell in range(ell_lo, ell_hi + 1) for r in range(r_lo, r_hi + 1)]


def _check_depth(depth, bounds):
    if depth < 1 or depth > bounds.max_depth:
        raise ValueError(f"depth {depth} outside 1..{bounds.max_depth}")


def enumerate_chains(depth: int, m: int, bounds: SearchBounds,
                     prune: bool = True) -> Iterator[Chain]:
    _check_depth(depth, bounds)
    options = [position_options(pos, depth, m, bounds, prune) for pos in range(depth)]
    for pairs in itertools.product(*options):
        yield Chain.from_unary(pairs)


def _verified(m, depth, bounds, chain, tested):
    # found chains are always re-checked through the string engine
    assert solves(chain, m, method="engine"), f"search produced a non-solution {chain}"
    return SearchResult("found", depth, bounds, tested, chain)


def search_depth_naive(m: int, depth: int, bounds: SearchBounds,
                       prune: bool = True) -> SearchResult:
    tested = 0
    for chain in enumerate_chains(depth, m, bounds, prune):
        tested += 1
        if solves(chain, m, spot_check=False):
            return _verified(m, depth, bounds, chain, tested)
    return SearchResult("exhausted", depth, bounds, tested)


class _FastSearch:
    """Depth-first search over sets of intermediate run lengths."""

    def __init__(self, m, depth, bounds):
        self.depth = depth
        self.options = [np.array(position_options(pos, depth, m, bounds), dtype=np.int64)
                        .reshape(-1, 2) for pos in range(depth)]
        self.sizes = [len(opts) for opts in self.options]
        # number of chains below a fixed prefix ending just before pos
        self.subtree = [math.prod(self.sizes[pos:]) for pos in range(depth + 1)]
        last = self.options[-1]
        self.last_ells = np.unique(last[:, 0]) if len(last) else last[:, 0]
        self.last_rs = sorted(set(last[:, 1].tolist()))
        self.memo = {}

    def run(self, lengths):
        return self._descend(tuple(sorted(set(lengths))), 0)

    def _descend(self, state, pos):
        key = (state, pos)
        if key not in self.memo:
            remaining = self.depth - pos
            if remaining == 1:
                hit = self._first_last(np.array([state], dtype=np.int64))[0]
                result = None if hit < 0 else (int(hit), [tuple(self.options[-1][hit].tolist())])
            elif remaining == 2:
                result = self._pair(state, pos)
            else:
                result = self._loop(state, pos)
            self.memo[key] = result
        return self.memo[key]

    def _loop(self, state, pos):
        below = self.subtree[pos + 1]
        for i, (ell, r) in enumerate(self.options[pos].tolist()):
            mapped = {rule_length_map((ell, r), k) for k in state}
            if 0 in mapped:
                continue  # an empty string stays empty
            found = self._descend(tuple(sorted(mapped)), pos + 1)
            if found is not None:
                offset, suffix = found
                return i * below + offset, [(ell, r)] + suffix
        return None

    def _pair(self, state, pos):
        opts = self.options[pos]
        if not len(opts) or not self.sizes[pos + 1]:
            return None
        s = np.array(state, dtype=np.int64)
        ells, rs = opts[:, :1], opts[:, 1:]
        mapped = (s // ells) * rs + s % ells
        hits = self._first_last(mapped)
        rows = np.flatnonzero(hits >= 0)
        if not len(rows):
            return None
        i = int(rows[0])
        j = int(hits[i])
        ell, r = opts[i].tolist()
        return i * self.sizes[pos + 1] + j, [(ell, r), tuple(self.options[-1][j].tolist())]

    def _first_last(self, lengths):
        """Index of the first outermost rule mapping every row of ``lengths`` to 1, or -1."""
        n_rows = lengths.shape[0]
        best = np.full(n_rows, -1, dtype=np.int64)
        if not len(self.options[-1]):
            return best
        ells = self.last_ells
        lo, hi = int(ells[0]), int(ells[-1])
        r_lo, n_r = self.last_rs[0], len(self.last_rs)
        big = np.iinfo(np.int64).max
        cand = np.full(n_rows, big, dtype=np.int64)
        if 0 in self.last_rs:
            # x % ell == 1 for every x  <=>  ell divides gcd(x - 1)
            g = np.gcd.reduce(lengths - 1, axis=1)
            divides = (g[:, None] % ells[None, :]) == 0
            any_div = divides.any(axis=1)
            first = np.argmax(divides, axis=1)
            idx = first * n_r + (0 - r_lo)
            cand = np.where(any_div, np.minimum(cand, idx), cand)
        if 1 in self.last_rs:
            # with ell >= 2, x -> 1 iff x == 1 or x == ell
            top = lengths.max(axis=1)
            ok = ((lengths == 1) | (lengths == top[:, None])).all(axis=1)
            ell = np.where(top == 1, lo, top)
            ok &= (ell >= lo) & (ell <= hi)
            idx = (ell - lo) * n_r + (1 - r_lo)
            cand = np.where(ok, np.minimum(cand, idx), cand)
        return np.where(cand == big, -1, cand)


def _fast_route_ok(m, depth, bounds):
    grow = max(bounds.max_r, 1) ** depth
    return m * grow < _INT64_HEADROOM


def search_depth(m: int, depth: int, bounds: SearchBounds) -> SearchResult:
    """First chain of exactly ``depth`` rules (pruned enumeration order) solving R(m)."""
    _check_depth(depth, bounds)
    if m < 1:
        raise ValueError("m must be >= 1")
    if not _fast_route_ok(m, depth, bounds):
        return search_depth_naive(m, depth, bounds)
    search = _FastSearch(m, depth, bounds)
    found = search.run(range(1, m + 1))
    if found is None:
        return SearchResult("exhausted", depth, bounds, search.subtree[0])
    offset, pairs = found
    return _verified(m, depth, bounds, Chain.from_unary(pairs), offset + 1)


def refute_depth(m: int, depth: int, bounds: SearchBounds) -> bool:
    """True iff no chain of exactly ``depth`` rules within ``bounds`` solves R(m)."""
    return not search_depth(m, depth, bounds).found


def find_min_depth(m: int, bounds: SearchBounds | None = None) -> SearchResult:
    """Shallowest solving chain, trying depths 1..max_depth in order.

    R(1) is solved by the empty chain, reported as depth 0.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    bounds = bounds or SearchBounds.default(m)
    if m == 1:
        return SearchResult("found", 0, bounds, 0, Chain())
    tested = 0
    for depth in range(1, bounds.max_depth + 1):
        result = search_depth(m, depth, bounds)
        tested += result.tested
        if result.found:
            return SearchResult("found", depth, bounds, tested, result.chain)
    return SearchResult("exhausted", bounds.max_depth, bounds, tested)
