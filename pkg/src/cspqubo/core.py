"""Instances, variable indexing and the QUBO / Ising containers.

Variables are ordered position-major: the selector for string ``x`` at
position ``i`` (both 1-based) lives at flat index ``(i - 1) * n + (x - 1)``,
so every position owns one contiguous block of ``n`` variables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np


class CspError(ValueError):
    """Base class for instance and model validation errors."""


class EmptySet(CspError):
    pass


class LengthMismatch(CspError):
    pass


class ZeroLength(CspError):
    pass


@dataclass(frozen=True)
class CspInstance:
    strings: tuple[str, ...]
    n: int
    m: int
    alphabet: frozenset[str]

    def column(self, i: int) -> tuple[str, ...]:
        """Symbols at 1-based position ``i`` across all strings."""
        if not 1 <= i <= self.m:
            raise IndexError(f"position {i} outside 1..{self.m}")
        return tuple(s[i - 1] for s in self.strings)

    @property
    def num_vars(self) -> int:
        return self.n * self.m


def validate_instance(raw: Iterable[str]) -> CspInstance:
    strings = tuple(raw)
    if not strings:
        raise EmptySet("the string set is empty")
    m = len(strings[0])
    for idx, s in enumerate(strings):
        if len(s) == 0:
            raise ZeroLength(f"string {idx + 1} is empty")
        if len(s) != m:
            raise LengthMismatch(
                f"string {idx + 1} has length {len(s)}, expected {m}"
            )
    alphabet = frozenset(ch for s in strings for ch in s)
    return CspInstance(strings=strings, n=len(strings), m=m, alphabet=alphabet)


class VarIndex(NamedTuple):
    x: int
    i: int


def flat_index(x: int, i: int, n: int, m: int | None = None) -> int:
    if not 1 <= x <= n:
        raise IndexError(f"string index {x} outside 1..{n}")
    if i < 1 or (m is not None and i > m):
        raise IndexError(f"position index {i} out of range")
    return (i - 1) * n + (x - 1)


def var_index(flat: int, n: int, m: int | None = None) -> VarIndex:
    """Inverse of :func:`flat_index`."""
    if flat < 0 or (m is not None and flat >= n * m):
        raise IndexError(f"flat index {flat} out of range")
    i, x = divmod(flat, n)
    return VarIndex(x + 1, i + 1)


def _clean_linear(linear: Mapping[int, float]) -> dict[int, float]:
    return {int(k): float(v) for k, v in sorted(linear.items()) if v != 0}


def _clean_quadratic(quadratic: Mapping[tuple[int, int], float]) -> dict[tuple[int, int], float]:
    out: dict[tuple[int, int], float] = {}
    for (u, v), c in quadratic.items():
        if u == v:
            raise ValueError(f"diagonal quadratic key ({u}, {v}); use the linear part")
        key = (u, v) if u < v else (v, u)
        out[key] = out.get(key, 0.0) + float(c)
    return {k: c for k, c in sorted(out.items()) if c != 0}


@dataclass(frozen=True)
class QuboModel:
    """``offset + sum_u linear[u] x_u + sum_{u<v} quadratic[u, v] x_u x_v``.

    Keys are normalised on construction: quadratic pairs are stored with
    ``u < v`` and zero coefficients are dropped.
    """

    num_vars: int
    linear: Mapping[int, float] = field(default_factory=dict)
    quadratic: Mapping[tuple[int, int], float] = field(default_factory=dict)
    offset: float = 0.0

    def __post_init__(self):
        lin = _clean_linear(self.linear)
        quad = _clean_quadratic(self.quadratic)
        for u in lin:
            if not 0 <= u < self.num_vars:
                raise IndexError(f"linear index {u} outside 0..{self.num_vars - 1}")
        for u, v in quad:
            if u < 0 or v >= self.num_vars:
                raise IndexError(f"quadratic key {(u, v)} out of range")
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "quadratic", quad)
        object.__setattr__(self, "offset", float(self.offset))

    def to_upper(self) -> np.ndarray:
        """Dense upper-triangular matrix with the linear part on the diagonal."""
        q = np.zeros((self.num_vars, self.num_vars))
        for u, c in self.linear.items():
            q[u, u] = c
        for (u, v), c in self.quadratic.items():
            q[u, v] = c
        return q

    def max_abs_coefficient(self) -> float:
        coeffs = [abs(c) for c in self.linear.values()]
        coeffs += [abs(c) for c in self.quadratic.values()]
        return max(coeffs, default=0.0)

    def __add__(self, other: QuboModel) -> QuboModel:
        if self.num_vars != other.num_vars:
            raise ValueError("cannot add models over different variable counts")
        lin = dict(self.linear)
        for u, c in other.linear.items():
            lin[u] = lin.get(u, 0.0) + c
        quad = dict(self.quadratic)
        for k, c in other.quadratic.items():
            quad[k] = quad.get(k, 0.0) + c
        return QuboModel(self.num_vars, lin, quad, self.offset + other.offset)


@dataclass(frozen=True)
class IsingModel:
    """``offset + sum_u h[u] s_u + sum_{u<v} J[u, v] s_u s_v`` with spins in {-1, +1}."""

    num_vars: int
    h: Mapping[int, float] = field(default_factory=dict)
    J: Mapping[tuple[int, int], float] = field(default_factory=dict)
    offset: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "h", _clean_linear(self.h))
        object.__setattr__(self, "J", _clean_quadratic(self.J))
        object.__setattr__(self, "offset", float(self.offset))


def to_ising(q: QuboModel) -> IsingModel:
    h: dict[int, float] = {}
    J: dict[tuple[int, int], float] = {}
    offset = q.offset
    for u, c in q.linear.items():
        h[u] = h.get(u, 0.0) + c / 2
        offset += c / 2
    for (u, v), c in q.quadratic.items():
        J[(u, v)] = c / 4
        h[u] = h.get(u, 0.0) + c / 4
        h[v] = h.get(v, 0.0) + c / 4
        offset += c / 4
    return IsingModel(q.num_vars, h, J, offset)


def ising_energy(model: IsingModel, spins: Sequence[int]) -> float:
    s = np.asarray(spins, dtype=float)
    if s.shape != (model.num_vars,):
        raise ValueError(f"expected {model.num_vars} spins, got shape {s.shape}")
    e = model.offset
    for u, c in model.h.items():
        e += c * s[u]
    for (u, v), c in model.J.items():
        e += c * s[u] * s[v]
    return float(e)
