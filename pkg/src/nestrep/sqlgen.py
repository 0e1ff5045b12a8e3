"""Render chains as portable SQL expressions and evaluate them back.

Some databases treat ``''`` as NULL, which breaks erasing rules such as the
last rule of the blow-up chain; ``SqlOptions.empty_literal`` lets callers
substitute a dialect-specific spelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .engine import Chain, replace, translate
from .errors import EmptyColumnExprError, LengthMismatchError, NonUnaryChainError
from .oracle import DIGITS_FROM, DIGITS_TO


@dataclass(frozen=True)
class SqlOptions:
    replace_name: str = "REPLACE"
    translate_name: str = "TRANSLATE"
    include_translate: bool = True
    translate_from: str = DIGITS_FROM
    translate_to: str = DIGITS_TO
    empty_literal: str = "''"

    def __post_init__(self):
        if self.include_translate and len(self.translate_from) != len(self.translate_to):
            raise LengthMismatchError("translate_from and translate_to differ in length")


def _literal(text: str, options: SqlOptions) -> str:
    if not text:
        return options.empty_literal
    return "'" + text.replace("'", "''") + "'"


def emit_sql(chain: Chain, column_expr: str, options: SqlOptions = SqlOptions()) -> str:
    if not column_expr or not column_expr.strip():
        raise EmptyColumnExprError("column expression must be non-empty")
    if not chain.is_unary:
        raise NonUnaryChainError("only chains over '1' can be emitted")
    term = column_expr
    if options.include_translate:
        term = (f"{options.translate_name}({term}, "
                f"{_literal(options.translate_from, options)}, "
                f"{_literal(options.translate_to, options)})")
    for rule in chain:
        term = (f"{options.replace_name}({term}, {_literal(rule.pattern, options)}, "
                f"{_literal(rule.replacement, options)})")
    return term


class SqlSyntaxError(ValueError):
    pass


class _Parser:
    """Recursive descent over the subset emitted by :func:`emit_sql`:
    function calls, quoted literals and bare column names."""

    def __init__(self, text, columns, functions):
        self.text = text
        self.pos = 0
        self.columns = columns
        self.functions = functions

    def parse(self):
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise SqlSyntaxError(f"trailing input at {self.pos}: {self.text[self.pos:]!r}")
        return value

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        self.skip_ws()
        if not self.text.startswith(ch, self.pos):
            raise SqlSyntaxError(f"expected {ch!r} at {self.pos}")
        self.pos += 1

    def expr(self):
        self.skip_ws()
        if self.text.startswith("'", self.pos):
            return self.string()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] in "_."):
            self.pos += 1
        name = self.text[start:self.pos]
        if not name:
            raise SqlSyntaxError(f"unexpected input at {start}")
        self.skip_ws()
        if not self.text.startswith("(", self.pos):
            if name not in self.columns:
                raise SqlSyntaxError(f"unknown column {name!r}")
            return self.columns[name]
        self.pos += 1
        args = [self.expr()]
        self.skip_ws()
        while self.text.startswith(",", self.pos):
            self.pos += 1
            args.append(self.expr())
            self.skip_ws()
        self.expect(")")
        func = self.functions.get(name.upper())
        if func is None:
            raise SqlSyntaxError(f"unknown function {name!r}")
        return func(*args)

    def string(self):
        self.pos += 1
        out = []
        while True:
            end = self.text.find("'", self.pos)
            if end < 0:
                raise SqlSyntaxError("unterminated string literal")
            out.append(self.text[self.pos:end])
            self.pos = end + 1
            if self.text.startswith("'", self.pos):
                out.append("'")
                self.pos += 1
            else:
                return "".join(out)


def evaluate_sql(expr: str, columns: Mapping[str, str], options: SqlOptions = SqlOptions()) -> str:
    """Evaluate an emitted expression using the engine's REPLACE and TRANSLATE."""
    functions = {options.replace_name.upper(): replace,
                 options.translate_name.upper(): translate}
    return _Parser(expr, dict(columns), functions).parse()
