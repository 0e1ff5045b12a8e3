"""Timing harness for digit-run normalisation strategies.

Outputs are compared before anything is timed; a report is only produced
when every implementation agrees on the whole corpus. Timings depend on the
machine and are never asserted.
"""

from __future__ import annotations

import hashlib
import random
import re
import statistics
import string
import time
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .construct import length_decreasing_chain, theorem3_chain
from .engine import Chain, apply_chain, translate
from .errors import DisagreementError
from .oracle import DIGITS_FROM, DIGITS_TO

DIGITS = string.digits
FILLER = string.ascii_letters + " -_/.:"

WARMUP = 3
REPEAT = 10


@dataclass(frozen=True)
class CorpusSpec:
    seed: int = 0
    count: int = 10_000
    max_len: int = 32
    digit_density: float = 0.5

    def __post_init__(self):
        if self.count < 0 or self.max_len < 1:
            raise ValueError("count must be >= 0 and max_len >= 1")
        if not 0.0 <= self.digit_density <= 1.0:
            raise ValueError("digit_density must lie in [0, 1]")


def generate_corpus(spec: CorpusSpec) -> list[str]:
    rng = random.Random(spec.seed)
    corpus = []
    for _ in range(spec.count):
        n = rng.randint(1, spec.max_len)
        corpus.append("".join(
            rng.choice(DIGITS) if rng.random() < spec.digit_density else rng.choice(FILLER)
            for _ in range(n)
        ))
    return corpus


def scan_digit_runs(s: str) -> str:
    """Collapse maximal runs of ASCII digits to '1' in a single pass."""
    out = []
    in_run = False
    for ch in s:
        if "0" <= ch <= "9":
            if not in_run:
                out.append("1")
                in_run = True
        else:
            out.append(ch)
            in_run = False
    return "".join(out)


_DIGIT_RUN = re.compile(r"[0-9]+")


def regex_digit_runs(s: str) -> str:
    return _DIGIT_RUN.sub("1", s)


def chain_normalizer(chain: Chain) -> Callable[[str], str]:
    def normalize(s: str) -> str:
        return apply_chain(chain, translate(s, DIGITS_FROM, DIGITS_TO))

    return normalize


def default_implementations() -> dict[str, Callable[[str], str]]:
    return {
        "theorem3": chain_normalizer(theorem3_chain(32)),
        "length-decreasing": chain_normalizer(length_decreasing_chain(4)),
        "scanner": scan_digit_runs,
        "regex": regex_digit_runs,
    }


LABELS = {
    "theorem3": "blow-up chain, m=32",
    "length-decreasing": "length-decreasing chain, 4 rules",
    "scanner": "one-pass scanner (regex stand-in)",
    "regex": "re.sub('[0-9]+', '1')",
}


@dataclass(frozen=True)
class BenchEntry:
    name: str
    total_s: float
    mean_s: float
    digest: str

    @property
    def label(self) -> str:
        return LABELS.get(self.name, self.name)


@dataclass(frozen=True)
class BenchReport:
    entries: tuple[BenchEntry, ...]
    count: int
    agreement: bool
    baseline: str = "scanner"

    def ratio(self, name: str) -> float | None:
        """Time of ``name`` relative to the baseline (None when undefined)."""
        times = {e.name: e.total_s for e in self.entries}
        base = times.get(self.baseline)
        if not base:
            return None
        return times[name] / base

    def to_text(self) -> str:
        header = f"{'implementation':<20}{'total_ms':>12}{'per_string_us':>16}{'ratio':>9}  {'digest':<16}  note"
        lines = [f"corpus={self.count} warmup={WARMUP} repeat={REPEAT} agreement={str(self.agreement).lower()}",
                 header]
        for e in self.entries:
            ratio = self.ratio(e.name)
            ratio_s = "-" if ratio is None else f"{ratio:.2f}"
            lines.append(f"{e.name:<20}{e.total_s * 1e3:>12.3f}{e.mean_s * 1e6:>16.3f}{ratio_s:>9}  "
                         f"{e.digest[:16]:<16}  {e.label}")
        return "\n".join(lines) + "\n"

    def to_records(self) -> str:
        lines = []
        for e in self.entries:
            ratio = self.ratio(e.name)
            lines.append(
                f"impl={e.name} total_s={e.total_s:.9f} mean_s={e.mean_s:.9f} "
                f"ratio_vs_{self.baseline}={'nan' if ratio is None else f'{ratio:.4f}'} "
                f"digest={e.digest} agreement={str(self.agreement).lower()}"
            )
        return "".join(line + "\n" for line in lines)


def _digest(outputs: Sequence[str]) -> str:
    h = hashlib.sha256()
    for out in outputs:
        h.update(out.encode())
        h.update(b"\n")
    return h.hexdigest()


def _check_agreement(corpus, outputs):
    names = list(outputs)
    reference = outputs[names[0]]
    for i, text in enumerate(corpus):
        if any(outputs[name][i] != reference[i] for name in names[1:]):
            raise DisagreementError(text, {name: outputs[name][i] for name in names})


def run_bench(corpus: Sequence[str],
              implementations: Mapping[str, Callable[[str], str]] | None = None,
              warmup: int = WARMUP, repeat: int = REPEAT) -> BenchReport:
    implementations = dict(implementations or default_implementations())
    if not implementations:
        raise ValueError("no implementations given")
    outputs = {name: [fn(s) for s in corpus] for name, fn in implementations.items()}
    _check_agreement(corpus, outputs)

    entries = []
    for name, fn in implementations.items():
        totals = []
        for i in range(warmup + repeat):
            start = time.perf_counter()
            for s in corpus:
                fn(s)
            if i >= warmup:
                totals.append(time.perf_counter() - start)
        total = statistics.median(totals) if corpus and totals else 0.0
        mean = total / len(corpus) if corpus else 0.0
        entries.append(BenchEntry(name, total, mean, _digest(outputs[name])))
    return BenchReport(tuple(entries), len(corpus), True)
