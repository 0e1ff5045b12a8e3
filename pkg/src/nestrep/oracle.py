"""Ground truth for task R(m): every run ``1^k`` with 1 <= k <= m must become ``1``."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .engine import UNARY, Chain, apply_chain, translate
from .errors import RunTooLongError
from .unary import chain_length_map, chain_length_trace

DIGITS_FROM = "023456789"
DIGITS_TO = "111111111"
DEFAULT_CAP = 10_000

# engine spot checks are skipped when an intermediate string would be larger
SPOT_CHECK_LIMIT = 1_000_000

_DIGIT_RUN = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class MaxM:
    kind: str  # "exact" or "at-least"
    value: int

    def __post_init__(self):
        if self.kind not in ("exact", "at-least"):
            raise ValueError(f"unknown MaxM kind {self.kind!r}")

    def __str__(self):
        return f"{self.kind} {self.value}"


def _spot_check(pairs, chain, k):
    trace = chain_length_trace(pairs, k)
    if max(trace) > SPOT_CHECK_LIMIT:
        return
    out = apply_chain(chain, UNARY * k)
    assert len(out) == trace[-1], f"length map disagrees with engine at k={k}"


def solves(chain: Chain, m: int, *, method: str = "length", spot_check: bool = True) -> bool:
    """True iff ``chain`` maps ``1^k`` to ``1`` for every k in 1..m.

    ``method="length"`` uses the unary length maps (an output made of ones is
    ``"1"`` exactly when its length is 1); ``method="engine"`` runs the string
    engine on every input.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    pairs = chain.unary_pairs()
    if method == "engine":
        return all(apply_chain(chain, UNARY * k) == UNARY for k in range(1, m + 1))
    if method != "length":
        raise ValueError(f"unknown method {method!r}")
    ok = all(chain_length_map(pairs, k) == 1 for k in range(1, m + 1))
    if spot_check:
        _spot_check(pairs, chain, m)
    return ok


def max_solved(chain: Chain, cap: int = DEFAULT_CAP) -> MaxM:
    """Largest m <= cap with ``solves(chain, m)``.

    ``value`` is 0 when even ``1`` is not preserved.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    pairs = chain.unary_pairs()
    for k in range(1, cap + 1):
        if chain_length_map(pairs, k) != 1:
            _spot_check(pairs, chain, k)
            return MaxM("exact", k - 1)
    return MaxM("at-least", cap)


@lru_cache(maxsize=256)
def _capability(chain: Chain, needed: int) -> int:
    return max_solved(chain, cap=needed).value


def longest_digit_run(s: str) -> int:
    return max((len(run) for run in _DIGIT_RUN.findall(s)), default=0)


def normalize_digit_runs(chain: Chain, s: str, *, verify: bool = True) -> str:
    """Collapse every maximal run of ASCII digits in ``s`` to ``"1"``."""
    if verify:
        longest = longest_digit_run(s)
        if longest:
            capability = _capability(chain, longest)
            if capability < longest:
                raise RunTooLongError(longest, capability)
    return apply_chain(chain, translate(s, DIGITS_FROM, DIGITS_TO))
