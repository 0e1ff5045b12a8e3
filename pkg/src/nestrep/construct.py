"""Chain generators: the three-rule blow-up chain, optimal length-decreasing
chains and the reach sequence 2, 4, 10, 40, 460, ... (OEIS A159860)."""

from __future__ import annotations

from .engine import Chain
from .unary import best_reach, max_reach


def theorem3_chain(m: int) -> Chain:
    """Three rules solving R(m) for m >= 5: 1 -> 1^(m-1), 1^m -> 1, 1^(m-2) -> ''.

    A run of k <= m ones grows to k(m-1) = (k-1)m + (m-k), shrinks to
    (k-1) + (m-k) = m-1, and the last rule leaves a single one. For m <= 4
    the minimal known chains are returned instead.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return Chain()
    if m == 2:
        return Chain.from_unary([(2, 1)])
    if m <= 4:
        return Chain.from_unary([(2, 1), (2, 1)])
    return Chain.from_unary([(1, m - 1), (m, 1), (m - 2, 0)])


def a159860(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    a = 2
    for _ in range(n - 1):
        q, rem = divmod(a * (a + 6), 4)
        if rem:
            raise ArithmeticError(f"recurrence left remainder {rem} at a={a}")
        a = q
    return a


def reach_sequence(n: int) -> list[int]:
    return [a159860(i) for i in range(1, n + 1)]


def length_decreasing_chain(n: int) -> Chain:
    """n rules of the form 1^ell -> 1 solving R(a159860(n)) and nothing larger.

    Each step prepends the innermost rule whose pattern length maximises the
    range of lengths squeezed into the previous chain's solved range; of the
    two maximisers the smaller pattern is taken.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = [(2, 1)]
    reach = 2
    for _ in range(n - 1):
        ell, new_reach = best_reach(reach)
        assert ell == reach // 2 + 1
        assert max_reach(ell, reach) == new_reach == reach * (reach + 6) // 4
        pairs.insert(0, (ell, 1))
        reach = new_reach
    return Chain.from_unary(pairs)


def intro_chain() -> Chain:
    """Replace 1111, 111, 11 and 11 again with 1; handles runs up to 34."""
    return Chain.from_unary([(4, 1), (3, 1), (2, 1), (2, 1)])
