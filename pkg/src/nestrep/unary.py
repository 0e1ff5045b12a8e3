"""Length arithmetic for replacement rules over the one-letter alphabet.

On ``'1' * k`` the rule ``1^ell -> 1^r`` consumes ``k // ell`` disjoint
blocks and leaves ``k % ell`` ones untouched, so the output length is
``(k // ell) * r + k % ell``. Everything here works on lengths only.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .engine import Rule
from .errors import NonUnaryChainError, NotLengthDecreasingError


class UnaryRule(NamedTuple):
    ell: int
    r: int

    def to_rule(self) -> Rule:
        return Rule.unary(self.ell, self.r)

    @classmethod
    def from_rule(cls, rule: Rule) -> "UnaryRule":
        if not rule.is_unary:
            raise NonUnaryChainError(f"rule {rule.pattern!r} -> {rule.replacement!r} is not unary")
        return cls(len(rule.pattern), len(rule.replacement))

    @property
    def length_decreasing(self) -> bool:
        return self.r <= self.ell


def rule_length_map(rule: tuple[int, int], k: int) -> int:
    ell, r = rule
    q, s = divmod(k, ell)
    return q * r + s


def chain_length_map(rules: Iterable[tuple[int, int]], k: int) -> int:
    for rule in rules:
        k = rule_length_map(rule, k)
    return k


def chain_length_trace(rules: Iterable[tuple[int, int]], k: int) -> list[int]:
    """Lengths before and after each rule: ``[k, f1(k), f2(f1(k)), ...]``."""
    trace = [k]
    for rule in rules:
        trace.append(rule_length_map(rule, trace[-1]))
    return trace


def image_range(rule: tuple[int, int], n: int) -> tuple[int, int, bool]:
    """Min, max and gap-freeness of the output lengths for inputs 1..n."""
    ell, r = rule
    if r > ell:
        raise NotLengthDecreasingError(f"rule ({ell}, {r}) lengthens its input")
    if n < 1:
        raise ValueError("n must be >= 1")
    image = {rule_length_map(rule, k) for k in range(1, n + 1)}
    lo, hi = min(image), max(image)
    return lo, hi, len(image) == hi - lo + 1


def max_reach_bruteforce(ell: int, target: int) -> int:
    """Largest n such that ``1^ell -> 1`` maps every length in 1..n into 1..target."""
    if ell < 2 or target < 1:
        raise ValueError("need ell >= 2 and target >= 1")
    k = 1
    while 1 <= rule_length_map((ell, 1), k) <= target:
        k += 1
    return k - 1


def max_reach_closed_form(ell: int, target: int) -> int:
    # first failure is k = (target + 2 - ell) * ell + (ell - 1), the smallest
    # input whose quotient plus remainder reaches target + 1
    return ell * (target + 3 - ell) - 2


def max_reach(ell: int, target: int) -> int:
    if ell < 2 or target < 1:
        raise ValueError("need ell >= 2 and target >= 1")
    if ell <= target + 2:
        return max_reach_closed_form(ell, target)
    return max_reach_bruteforce(ell, target)


def best_reach(target: int) -> tuple[int, int]:
    """Smallest pattern length maximising ``max_reach`` and the reach it attains."""
    # ell * (target + 3 - ell) peaks at ell = (target + 3) / 2
    candidates = {(target + 3) // 2, (target + 4) // 2}
    best = max(sorted(candidates), key=lambda ell: max_reach(ell, target))
    return best, max_reach(best, target)
