"""SQL-style REPLACE / TRANSLATE and nested replacement chains.

A chain is stored innermost first: ``chain.rules[0]`` is applied to the
input, the last rule is the outermost call in the nested SQL notation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    ChainFormatError,
    DuplicateSourceCharError,
    EmptyPatternError,
    LengthMismatchError,
    NonUnaryChainError,
)

UNARY = "1"


@dataclass(frozen=True)
class Rule:
    pattern: str
    replacement: str

    def __post_init__(self):
        if not self.pattern:
            raise EmptyPatternError("rule pattern must be non-empty")

    @classmethod
    def unary(cls, ell: int, r: int) -> "Rule":
        if ell < 1 or r < 0:
            raise ValueError(f"invalid unary rule lengths ({ell}, {r})")
        return cls(UNARY * ell, UNARY * r)

    @property
    def is_unary(self) -> bool:
        return _is_unary_text(self.pattern) and _is_unary_text(self.replacement)

    def __str__(self):
        return f"{self.pattern}->{self.replacement or 'ε'}"


def _is_unary_text(s: str) -> bool:
    return s.count(UNARY) == len(s)


@dataclass(frozen=True)
class Chain:
    rules: tuple[Rule, ...] = ()

    def __init__(self, rules: Iterable[Rule] = ()):
        object.__setattr__(self, "rules", tuple(rules))

    @classmethod
    def from_unary(cls, pairs: Iterable[tuple[int, int]]) -> "Chain":
        return cls(Rule.unary(ell, r) for ell, r in pairs)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def __getitem__(self, i):
        return self.rules[i]

    @property
    def is_unary(self) -> bool:
        return all(rule.is_unary for rule in self.rules)

    def unary_pairs(self) -> list[tuple[int, int]]:
        """(pattern length, replacement length) per rule, innermost first."""
        for rule in self.rules:
            if not rule.is_unary:
                raise NonUnaryChainError(f"rule {rule.pattern!r} -> {rule.replacement!r} is not unary")
        return [(len(rule.pattern), len(rule.replacement)) for rule in self.rules]

    def __str__(self):
        return "[" + ", ".join(str(rule) for rule in self.rules) + "]"


def replace(s: str, pattern: str, replacement: str) -> str:
    """Substitute every leftmost, non-overlapping occurrence of ``pattern``.

    One left-to-right pass; scanning resumes right after each consumed
    occurrence and emitted text is never re-examined. Python's
    ``str.replace`` has exactly this behaviour for a non-empty pattern.
    """
    if not pattern:
        raise EmptyPatternError("REPLACE pattern must be non-empty")
    return s.replace(pattern, replacement)


@lru_cache(maxsize=64)
def _translation_table(from_chars: str, to_chars: str) -> dict[int, int]:
    # the deleting form of TRANSLATE (shorter third argument) is not supported
    if len(from_chars) != len(to_chars):
        raise LengthMismatchError(
            f"TRANSLATE arguments differ in length ({len(from_chars)} vs {len(to_chars)})"
        )
    if len(set(from_chars)) != len(from_chars):
        raise DuplicateSourceCharError(f"repeated character in {from_chars!r}")
    return str.maketrans(from_chars, to_chars)


def translate(s: str, from_chars: str, to_chars: str) -> str:
    """Map each character of ``s`` found in ``from_chars`` to the character at
    the same position in ``to_chars``; other characters pass through."""
    return s.translate(_translation_table(from_chars, to_chars))


def apply_chain(chain: Chain | Sequence[Rule], s: str) -> str:
    for rule in chain:
        s = replace(s, rule.pattern, rule.replacement)
    return s


# chain text format

_UNARY_LINE = re.compile(r"(\d+) (\d+)")
_LITERAL_LINE = re.compile(r'"([^"]*)" -> "([^"]*)"')


def parse_chain(text: str) -> Chain:
    rules = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if match := _UNARY_LINE.fullmatch(line):
            ell, r = int(match[1]), int(match[2])
            if ell < 1:
                raise ChainFormatError(lineno, raw, "pattern length must be >= 1")
            rules.append(Rule.unary(ell, r))
        elif match := _LITERAL_LINE.fullmatch(line):
            if not match[1]:
                raise ChainFormatError(lineno, raw, "empty pattern")
            rules.append(Rule(match[1], match[2]))
        else:
            raise ChainFormatError(lineno, raw, "expected '<ell> <r>' or '\"<pattern>\" -> \"<replacement>\"'")
    return Chain(rules)


def format_chain(chain: Chain, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    for rule in chain:
        if '"' in rule.pattern or '"' in rule.replacement:
            raise ValueError(f"rule {rule} cannot be written without escapes")
        if rule.is_unary:
            lines.append(f"{len(rule.pattern)} {len(rule.replacement)}")
        else:
            lines.append(f'"{rule.pattern}" -> "{rule.replacement}"')
    return "".join(line + "\n" for line in lines)
