"""Lagrange-parameter bounds, chain-strength guidance and Pegasus capacity.

Two lower bounds on the penalty energy are available. ``min_ha_paper`` is the
published piecewise formula; ``min_ha_exact`` is the true minimum of the
penalty Hamiltonian, ``A * m * (n - 1)``. They coincide only for ``n`` in
{2, 4}. Both are always reported.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Literal

from .core import CspError, CspInstance
from .distance import hamming_f

LambdaSource = Literal["paper", "exact"]

PEGASUS_P16 = 16
# starting chain strength per case; only case 1's value is published
CASE_GAMMA = {1: 1.0, 2: 2.0, 3: 4.0, 4: 6.0}
FEW_STRINGS_MAX = 8
LOW_SPREAD_MAX = 0.5


class DomainError(CspError):
    pass


@dataclass(frozen=True)
class AdvisorReport:
    B: float
    lambda_paper: float
    lambda_exact: float
    A_upper_paper: int
    A_upper_exact: int
    A_range: tuple[float, int]
    lambda_source: str
    chain_case: int | str
    gamma_suggested: float
    symbol_spread: float
    capacity_P16: int
    max_strings_for_window: int

    def to_dict(self) -> dict:
        return asdict(self)


def max_hb_bound(instance: CspInstance, B: float = 1.0) -> tuple[float, float]:
    """``(B*m*n*(n-1), exact max)``; the exact value is attained at all-ones."""
    n, m = instance.n, instance.m
    bound = B * m * n * (n - 1)
    exact = 0
    for i in range(1, m + 1):
        col = instance.column(i)
        exact += sum(hamming_f(a, b) for a in col for b in col)
    return float(bound), float(B * exact)


def min_ha_paper(m: int, n: int, A: float = 1.0) -> float:
    if n < 2:
        raise DomainError(f"the published bound needs n >= 2, got n={n}")
    if n == 2:
        return float(A * m)
    if n <= 4:
        return A * m * (n - 1) * (n - 2) / 2
    return float(A * m * n)


def min_ha_exact(m: int, n: int, A: float = 1.0) -> float:
    # per position, k active selectors cost A*((n - k) + k*(k - 1)/2)
    per_position = min((n - k) + k * (k - 1) // 2 for k in range(n + 1))
    return float(A * m * per_position)


def _lambda(m: int, n: int, source: LambdaSource) -> float:
    if source == "paper":
        return min_ha_paper(m, n, 1.0)
    if source == "exact":
        return min_ha_exact(m, n, 1.0)
    raise ValueError(f"unknown lambda source {source!r}")


def a_upper(instance: CspInstance, B: float = 1.0, lambda_source: LambdaSource = "exact") -> int:
    n, m = instance.n, instance.m
    if n < 2:
        raise DomainError(f"A range needs n >= 2, got n={n}")
    bound, _ = max_hb_bound(instance, B)
    return math.ceil(bound / _lambda(m, n, lambda_source))


def a_range(
    instance: CspInstance, B: float = 1.0, lambda_source: LambdaSource = "exact"
) -> tuple[float, int]:
    """Half-open interval ``(B, upper]`` as a ``(low, high)`` tuple."""
    return (float(B), a_upper(instance, B, lambda_source))


def default_A(instance: CspInstance, B: float = 1.0) -> float:
    """Midpoint of the exact-lambda range, rounded up."""
    low, high = a_range(instance, B, "exact")
    return float(math.ceil((low + high) / 2))


def symbol_spread(instance: CspInstance) -> float:
    """Mean over positions of ``(|column alphabet| - 1) / (n - 1)``, in [0, 1]."""
    n = instance.n
    if n < 2:
        return 0.0
    spreads = [(len(set(instance.column(i))) - 1) / (n - 1) for i in range(1, instance.m + 1)]
    return sum(spreads) / len(spreads)


def chain_strength_guideline(
    instance: CspInstance, case: int | None = None
) -> tuple[int | str, float]:
    """Return ``(case, suggested chain strength)``.

    ``n <= 4`` embeds without chains and always gets ``("baseline", 0.0)``.
    Otherwise the case is classified from the string count and
    :func:`symbol_spread`, unless ``case`` forces one.
    """
    if instance.n <= 4:
        return "baseline", 0.0
    if case is None:
        many = instance.n > FEW_STRINGS_MAX
        high = symbol_spread(instance) > LOW_SPREAD_MAX
        case = 1 + int(high) + 2 * int(many)
    if case not in CASE_GAMMA:
        raise ValueError(f"chain strength case must be 1..4, got {case}")
    return case, CASE_GAMMA[case]


def qpu_capacity(M: int = PEGASUS_P16, m_max: int = 1) -> tuple[int, int]:
    """``(12*M - 10, floor((12*M - 10) / m_max))``."""
    if M < 1 or m_max < 1:
        raise ValueError("M and m_max must be at least 1")
    max_n = 12 * M - 10
    return max_n, max_n // m_max


def advise(
    instance: CspInstance,
    B: float = 1.0,
    lambda_source: LambdaSource = "exact",
    m_max: int = 1,
    case: int | None = None,
) -> AdvisorReport:
    n, m = instance.n, instance.m
    if n >= 2:
        lam_p, lam_e = _lambda(m, n, "paper"), _lambda(m, n, "exact")
        up_p, up_e = a_upper(instance, B, "paper"), a_upper(instance, B, "exact")
    else:
        # a single string is its own closest string; any A > B works
        lam_p, lam_e = float("nan"), 0.0
        up_p = up_e = math.ceil(B) + 1
    chain_case, gamma = chain_strength_guideline(instance, case)
    capacity, _ = qpu_capacity(PEGASUS_P16, 1)
    return AdvisorReport(
        B=float(B),
        lambda_paper=lam_p,
        lambda_exact=lam_e,
        A_upper_paper=up_p,
        A_upper_exact=up_e,
        A_range=(float(B), up_p if lambda_source == "paper" else up_e),
        lambda_source=lambda_source,
        chain_case=chain_case,
        gamma_suggested=gamma,
        symbol_spread=symbol_spread(instance),
        capacity_P16=capacity,
        max_strings_for_window=qpu_capacity(PEGASUS_P16, m_max)[1],
    )
