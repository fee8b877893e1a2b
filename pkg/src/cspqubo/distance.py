"""Hamming distances, per-position sums and the classical exact solvers."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import CspError, CspInstance, LengthMismatch

DEFAULT_SEARCH_GUARD = 10**7


class SearchSpaceTooLarge(CspError):
    pass


@dataclass(frozen=True)
class PositionAlphabet:
    i: int
    symbols: frozenset[str]


@dataclass(frozen=True)
class ClosestResult:
    winners: tuple[frozenset[str], ...]
    canonical: str
    k: int
    total: int


def hamming_f(c1: str, c2: str) -> int:
    return 0 if c1 == c2 else 1


def hamming_distance(s1: str, s2: str) -> int:
    if len(s1) != len(s2):
        raise LengthMismatch(f"lengths {len(s1)} and {len(s2)} differ")
    return sum(hamming_f(a, b) for a, b in zip(s1, s2))


def sum_distance(candidate: str, instance: CspInstance) -> int:
    if len(candidate) != instance.m:
        raise LengthMismatch(f"candidate length {len(candidate)} != m={instance.m}")
    return sum(hamming_distance(candidate, s) for s in instance.strings)


def max_distance(candidate: str, instance: CspInstance) -> int:
    if len(candidate) != instance.m:
        raise LengthMismatch(f"candidate length {len(candidate)} != m={instance.m}")
    return max(hamming_distance(candidate, s) for s in instance.strings)


def delta_i(symbol: str, i: int, instance: CspInstance) -> int:
    """Mismatches of ``symbol`` against column ``i`` (1-based)."""
    return sum(hamming_f(symbol, c) for c in instance.column(i))


def position_alphabet(i: int, instance: CspInstance) -> PositionAlphabet:
    return PositionAlphabet(i, frozenset(instance.column(i)))


def _result(winners: list[frozenset[str]], instance: CspInstance) -> ClosestResult:
    canonical = "".join(min(w) for w in winners)
    return ClosestResult(
        winners=tuple(winners),
        canonical=canonical,
        k=max_distance(canonical, instance),
        total=sum_distance(canonical, instance),
    )


def per_position_argmin(instance: CspInstance) -> ClosestResult:
    winners = []
    for i in range(1, instance.m + 1):
        scores = {c: delta_i(c, i, instance) for c in position_alphabet(i, instance).symbols}
        best = min(scores.values())
        winners.append(frozenset(c for c, s in scores.items() if s == best))
    return _result(winners, instance)


def brute_force_closest(
    instance: CspInstance,
    search_space: str = "full",
    guard: int = DEFAULT_SEARCH_GUARD,
) -> ClosestResult:
    """Enumerate every candidate and keep the minimum-``D`` strings.

    ``search_space`` is ``"full"`` (all of alphabet^m) or ``"per-position"``
    (the product of the column alphabets). This deliberately ignores the
    column decomposition so it can serve as an oracle for it.
    """
    if search_space == "full":
        choices = [sorted(instance.alphabet)] * instance.m
    elif search_space == "per-position":
        choices = [sorted(set(instance.column(i))) for i in range(1, instance.m + 1)]
    else:
        raise ValueError(f"unknown search space {search_space!r}")
    size = math.prod(len(c) for c in choices)
    if size > guard:
        raise SearchSpaceTooLarge(f"{size} candidates exceeds guard {guard}")

    best = None
    optima: list[str] = []
    # product() over sorted choices yields candidates in code-point order,
    # so optima[0] is the lexicographically smallest minimiser.
    for cand in itertools.product(*choices):
        s = "".join(cand)
        d = sum(hamming_distance(s, t) for t in instance.strings)
        if best is None or d < best:
            best, optima = d, [s]
        elif d == best:
            optima.append(s)
    winners = [frozenset(s[i] for s in optima) for i in range(instance.m)]
    canonical = optima[0]
    return ClosestResult(
        winners=tuple(winners),
        canonical=canonical,
        k=max_distance(canonical, instance),
        total=best,
    )
