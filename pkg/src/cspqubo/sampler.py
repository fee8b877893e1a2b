"""Exact and annealing-style solvers for :class:`QuboModel`.

``solve_exhaustive`` enumerates all ``2**N`` assignments by splitting the
variables into a low and a high half, so each chunk is a single matrix
product instead of a Python loop. ``sample_sa`` runs independent Metropolis
restarts, one per read, vectorised across reads.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .builder import HamiltonianKind, PenaltyParams, STANDARD, build_per_position, energies
from .core import CspError, CspInstance, QuboModel

EXHAUSTIVE_GUARD = 24
OPTIMA_CAP = 10**4
TIE_TOL = 1e-9
_LOW_BITS = 12
_HIGH_CHUNK = 256


class TooManyVariables(CspError):
    pass


@dataclass(frozen=True)
class ExactSolution:
    energy: float
    optima: list[np.ndarray]
    truncated: bool = False


@dataclass(frozen=True)
class DecomposedSolution:
    energy: float
    assignment: np.ndarray
    block_energies: tuple[float, ...]


@dataclass(frozen=True)
class Record:
    assignment: tuple[int, ...]
    energy: float
    count: int


@dataclass(frozen=True)
class SampleSet:
    records: tuple[Record, ...]
    num_reads: int

    @property
    def first(self) -> Record:
        return self.records[0]


@dataclass(frozen=True)
class AnnealSchedule:
    initial_temperature: float
    final_temperature: float = 0.01
    sweeps: int = 100

    def __post_init__(self):
        if self.final_temperature <= 0 or self.initial_temperature < self.final_temperature:
            raise ValueError("need initial >= final > 0")
        if self.sweeps < 1:
            raise ValueError("sweeps must be at least 1")

    @classmethod
    def default(cls, model: QuboModel) -> AnnealSchedule:
        t0 = max(model.max_abs_coefficient(), 0.01)
        return cls(t0, 0.01, max(1, 20 * model.num_vars))

    def temperatures(self) -> np.ndarray:
        if self.sweeps == 1:
            return np.array([self.final_temperature])
        return np.geomspace(self.initial_temperature, self.final_temperature, self.sweeps)


def _bits(k: int) -> np.ndarray:
    idx = np.arange(2**k, dtype=np.int64)
    return ((idx[:, None] >> np.arange(k)) & 1).astype(float)


def solve_exhaustive(
    model: QuboModel, guard: int = EXHAUSTIVE_GUARD, cap: int = OPTIMA_CAP
) -> ExactSolution:
    N = model.num_vars
    if N > guard:
        raise TooManyVariables(f"{N} variables exceeds exhaustive guard {guard}")
    if N == 0:
        return ExactSolution(model.offset, [np.zeros(0, dtype=np.int8)])

    Q = model.to_upper()
    lo = min(N, _LOW_BITS)
    XL = _bits(lo)
    EL = np.einsum("ri,ij,rj->r", XL, Q[:lo, :lo], XL) + model.offset
    hi = N - lo
    XH_all = _bits(hi)
    EH_all = np.einsum("ri,ij,rj->r", XH_all, Q[lo:, lo:], XH_all)
    cross = XL @ Q[:lo, lo:]

    best = np.inf
    found: list[tuple[int, int]] = []
    truncated = False
    for start in range(0, len(XH_all), _HIGH_CHUNK):
        XH = XH_all[start:start + _HIGH_CHUNK]
        E = EL[:, None] + EH_all[None, start:start + len(XH)] + cross @ XH.T
        emin = E.min()
        if emin < best - TIE_TOL:
            best, found, truncated = emin, [], False
        if emin <= best + TIE_TOL:
            rows, cols = np.nonzero(E <= best + TIE_TOL)
            for r, c in zip(rows, cols):
                if len(found) >= cap:
                    truncated = True
                    break
                found.append((int(r), start + int(c)))

    optima = [
        np.concatenate([XL[r], XH_all[c]]).astype(np.int8) for r, c in found
    ]
    return ExactSolution(float(best), optima, truncated)


def _block_key(bits: np.ndarray, column: tuple[str, ...]):
    # prefer a valid selection, then the smallest selected symbol
    chosen = {column[x] for x in np.flatnonzero(bits)}
    if len(chosen) == 1:
        return (0, next(iter(chosen)))
    return (1, "")


def solve_decomposed(
    instance: CspInstance,
    params: PenaltyParams,
    kind: HamiltonianKind = STANDARD,
    guard: int = EXHAUSTIVE_GUARD,
) -> DecomposedSolution:
    """Solve each position block exactly and concatenate the block optima."""
    if instance.n > guard:
        raise TooManyVariables(f"block of {instance.n} variables exceeds guard {guard}")
    parts, block_energies = [], []
    for i in range(1, instance.m + 1):
        sol = solve_exhaustive(build_per_position(instance, params, kind, i), guard)
        col = instance.column(i)
        parts.append(min(sol.optima, key=lambda b: _block_key(b, col)))
        block_energies.append(sol.energy)
    return DecomposedSolution(
        float(sum(block_energies)), np.concatenate(parts), tuple(block_energies)
    )


def sample_sa(
    model: QuboModel,
    num_reads: int = 100,
    schedule: AnnealSchedule | None = None,
    seed: int = 0,
) -> SampleSet:
    """Simulated annealing with ``num_reads`` independent random restarts.

    Read ``r`` draws everything from ``default_rng([seed, r])``, so results
    do not depend on how reads are batched.
    """
    if num_reads < 1:
        raise ValueError("num_reads must be at least 1")
    N = model.num_vars
    if N == 0:
        return SampleSet((Record((), model.offset, num_reads),), num_reads)
    schedule = schedule or AnnealSchedule.default(model)

    Q = model.to_upper()
    lin = np.diag(Q).copy()
    Qs = Q + Q.T
    np.fill_diagonal(Qs, 0.0)

    rngs = [np.random.default_rng([seed, r]) for r in range(num_reads)]
    X = np.stack([rng.integers(0, 2, N) for rng in rngs]).astype(float)
    field = X @ Qs

    for T in schedule.temperatures():
        U = np.stack([rng.random(N) for rng in rngs])
        for j in range(N):
            xj = X[:, j]
            dE = (1.0 - 2.0 * xj) * (lin[j] + field[:, j])
            accept = (dE <= 0) | (U[:, j] < np.exp(-np.maximum(dE, 0.0) / T))
            step = np.where(accept, 1.0 - 2.0 * xj, 0.0)
            X[:, j] = xj + step
            field += step[:, None] * Qs[j][None, :]

    uniq, counts = np.unique(X.astype(np.int8), axis=0, return_counts=True)
    es = energies(model, uniq)
    records = sorted(
        (Record(tuple(int(b) for b in row), float(e), int(c)) for row, e, c in zip(uniq, es, counts)),
        key=lambda rec: (rec.energy, rec.assignment),
    )
    return SampleSet(tuple(records), num_reads)
