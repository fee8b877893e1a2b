"""Decoding of assignments and Occurrence Ratio statistics over sample sets."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import CspInstance
from .sampler import SampleSet


@dataclass(frozen=True)
class ZeroSelected:
    position: int


@dataclass(frozen=True)
class ConflictingSymbols:
    position: int


@dataclass(frozen=True)
class DecodedOutcome:
    string: str | None = None
    reason: ZeroSelected | ConflictingSymbols | None = None

    @property
    def valid(self) -> bool:
        return self.string is not None


@dataclass(frozen=True)
class OccurrenceReport:
    """Per-string counts ``N_P`` and ratios ``OR_P = N_P / num_reads``."""

    counts: dict[str, int]
    num_reads: int
    invalid_count: int
    ratios: dict[str, float] = field(init=False)
    mor: float = field(init=False)
    mor_strings: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        ratios = {p: c / self.num_reads for p, c in self.counts.items()}
        mor = max(ratios.values(), default=0.0)
        object.__setattr__(self, "ratios", ratios)
        object.__setattr__(self, "mor", mor)
        object.__setattr__(
            self, "mor_strings", tuple(sorted(p for p, r in ratios.items() if r == mor))
        )

    def occurrence_ratio(self, p: str) -> float:
        return self.ratios.get(p, 0.0)


def decode(a, instance: CspInstance, strict: bool = False) -> DecodedOutcome:
    """Read the chosen symbol at every position.

    Several selectors at one position are accepted when they carry the same
    symbol, unless ``strict`` demands exactly one.
    """
    n, m = instance.n, instance.m
    bits = np.asarray(a)
    if bits.shape != (n * m,):
        raise ValueError(f"assignment has shape {bits.shape}, expected ({n * m},)")
    out = []
    for i in range(1, m + 1):
        block = bits[(i - 1) * n: i * n]
        active = np.flatnonzero(block)
        if len(active) == 0:
            return DecodedOutcome(reason=ZeroSelected(i))
        col = instance.column(i)
        symbols = {col[x] for x in active}
        if len(symbols) > 1 or (strict and len(active) > 1):
            return DecodedOutcome(reason=ConflictingSymbols(i))
        out.append(symbols.pop())
    return DecodedOutcome("".join(out))


def occurrence_report(samples: SampleSet, instance: CspInstance, strict: bool = False) -> OccurrenceReport:
    counts: dict[str, int] = {}
    invalid = 0
    for rec in samples.records:
        outcome = decode(rec.assignment, instance, strict)
        if outcome.valid:
            counts[outcome.string] = counts.get(outcome.string, 0) + rec.count
        else:
            invalid += rec.count
    return OccurrenceReport(counts, samples.num_reads, invalid)
