"""Penalty and objective Hamiltonians for the closest string problem.

Both formulations share the same penalty part and the same variable layout;
they differ only in the per-pair mismatch weight used in the objective:
``hamming_f`` for the standard kind, and the smooth ``d^2 / (d^2 + 1)`` with
``d = C(a) - C(b)`` for the numeric kind.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal, Sequence

import numpy as np

from .core import CspError, CspInstance, QuboModel, flat_index
from .distance import hamming_f

Bijection = Callable[[str], float]


class NonInjectiveBijection(CspError):
    pass


@dataclass(frozen=True)
class HamiltonianKind:
    variant: Literal["standard", "numeric"] = "standard"
    bijection: Bijection = ord

    @classmethod
    def standard(cls) -> HamiltonianKind:
        return cls("standard")

    @classmethod
    def numeric(cls, bijection: Bijection = ord) -> HamiltonianKind:
        return cls("numeric", bijection)

    @classmethod
    def parse(cls, name: str) -> HamiltonianKind:
        if name not in ("standard", "numeric"):
            raise ValueError(f"unknown hamiltonian {name!r}")
        return cls(name)

    def weight(self, a: str, b: str) -> float:
        if self.variant == "standard":
            return float(hamming_f(a, b))
        return numeric_weight(a, b, self.bijection)


STANDARD = HamiltonianKind.standard()
NUMERIC = HamiltonianKind.numeric()


@dataclass(frozen=True)
class PenaltyParams:
    A: float
    B: float = 1.0

    def __post_init__(self):
        if self.A <= 0 or self.B <= 0:
            raise ValueError(f"A and B must be positive, got A={self.A}, B={self.B}")


def numeric_weight(a: str, b: str, bijection: Bijection = ord) -> float:
    d = float(bijection(a)) - float(bijection(b))
    return d * d / (d * d + 1.0)


def check_injective(instance: CspInstance, bijection: Bijection) -> None:
    seen: dict[float, str] = {}
    for c in sorted(instance.alphabet):
        v = float(bijection(c))
        if v in seen:
            raise NonInjectiveBijection(f"{seen[v]!r} and {c!r} both map to {v}")
        seen[v] = c


def _block(i: int, n: int) -> range:
    start = (i - 1) * n
    return range(start, start + n)


def build_penalty(instance: CspInstance, A: float) -> QuboModel:
    n, m = instance.n, instance.m
    linear = {u: -A for u in range(n * m)}
    quadratic = {}
    for i in range(1, m + 1):
        block = _block(i, n)
        for a in range(len(block)):
            for b in range(a + 1, len(block)):
                quadratic[(block[a], block[b])] = A
    return QuboModel(n * m, linear, quadratic, offset=A * m * n)


def _objective(instance: CspInstance, B: float, weight: Callable[[str, str], float]) -> QuboModel:
    n = instance.n
    linear = {}
    for i in range(1, instance.m + 1):
        col = instance.column(i)
        for x in range(1, n + 1):
            # the y == x term is zero by construction; kept to mirror the sum
            linear[flat_index(x, i, n)] = B * sum(weight(col[x - 1], col[y]) for y in range(n))
    return QuboModel(instance.num_vars, linear)


def build_objective_standard(instance: CspInstance, B: float) -> QuboModel:
    return _objective(instance, B, STANDARD.weight)


def build_objective_numeric(instance: CspInstance, B: float, bijection: Bijection = ord) -> QuboModel:
    check_injective(instance, bijection)
    return _objective(instance, B, lambda a, b: numeric_weight(a, b, bijection))


def build_hamiltonian(
    instance: CspInstance, params: PenaltyParams, kind: HamiltonianKind = STANDARD
) -> QuboModel:
    if kind.variant == "standard":
        objective = build_objective_standard(instance, params.B)
    else:
        objective = build_objective_numeric(instance, params.B, kind.bijection)
    return build_penalty(instance, params.A) + objective


def restrict(model: QuboModel, variables: Sequence[int], offset: float | None = None) -> QuboModel:
    """Sub-model on ``variables``, relabelled to ``0..len(variables)-1``.

    Quadratic terms leaving the subset are an error; the CSP models have none
    across positions.
    """
    relabel = {u: k for k, u in enumerate(variables)}
    linear = {relabel[u]: c for u, c in model.linear.items() if u in relabel}
    quadratic = {}
    for (u, v), c in model.quadratic.items():
        if u in relabel and v in relabel:
            quadratic[(relabel[u], relabel[v])] = c
        elif u in relabel or v in relabel:
            raise ValueError(f"coupling {(u, v)} crosses the variable subset")
    return QuboModel(len(variables), linear, quadratic, 0.0 if offset is None else offset)


def build_per_position(
    instance: CspInstance, params: PenaltyParams, kind: HamiltonianKind, i: int
) -> QuboModel:
    """The ``n``-variable block of position ``i``, with its share ``A*n`` of the offset."""
    if not 1 <= i <= instance.m:
        raise IndexError(f"position {i} outside 1..{instance.m}")
    full = build_hamiltonian(instance, params, kind)
    return restrict(full, list(_block(i, instance.n)), offset=params.A * instance.n)


def _as_bits(a, num_vars: int) -> np.ndarray:
    bits = np.asarray(a)
    if bits.shape != (num_vars,):
        raise ValueError(f"assignment has shape {bits.shape}, model has {num_vars} variables")
    return bits


def energy(model: QuboModel, a) -> float:
    bits = _as_bits(a, model.num_vars)
    e = model.offset
    for u, c in model.linear.items():
        if bits[u]:
            e += c
    for (u, v), c in model.quadratic.items():
        if bits[u] and bits[v]:
            e += c
    return float(e)


def energies(model: QuboModel, X: np.ndarray) -> np.ndarray:
    """Vectorised :func:`energy` over the rows of ``X``."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != model.num_vars:
        raise ValueError(f"assignments have {X.shape[1]} columns, model has {model.num_vars}")
    Q = model.to_upper()
    return model.offset + np.einsum("ri,ij,rj->r", X, Q, X)


def hamiltonian_energy_direct(
    instance: CspInstance, params: PenaltyParams, kind: HamiltonianKind, a
) -> float:
    """Evaluate ``H_A + H_B`` term by term from the selector matrix.

    Independent of :class:`QuboModel`; used to cross-check the builders.
    """
    n, m = instance.n, instance.m
    bits = _as_bits(a, n * m)
    # alpha[x][i], 0-based, read via the position-major layout
    alpha = [[int(bits[(i * n) + x]) for i in range(m)] for x in range(n)]
    A, B = params.A, params.B
    cols = [instance.column(i + 1) for i in range(m)]

    first = A * sum(1 - alpha[x][i] for i in range(m) for x in range(n))
    second = A * sum(
        alpha[x][i] * sum(alpha[y][i] for y in range(x + 1, n))
        for i in range(m)
        for x in range(n)
    )
    objective = B * sum(
        alpha[x][i] * sum(kind.weight(cols[i][x], cols[i][y]) for y in range(n))
        for i in range(m)
        for x in range(n)
    )
    return float(first + second + objective)
