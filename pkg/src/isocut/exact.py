"""Brute-force exact solver over partition-induced cuts.

Every assignment of the free (non-terminal) vertices to terminal indices is
enumerated; assignments inducing the same cut edge set are merged. Weights
are scaled to integers by the lcm of their denominators, so the vectorized
table is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np

from .graph import Instance, KCutSolution

DEFAULT_BUDGET = 16
_CHUNK_ROWS = 1 << 15


class BudgetExceeded(RuntimeError):
    def __init__(self, free: int, budget: int):
        super().__init__(
            f"exact enumeration refused: {free} free vertices exceeds budget {budget}"
        )
        self.free = free
        self.budget = budget


@dataclass(frozen=True)
class ExactResult:
    optimum_weight: Fraction
    optima: tuple[KCutSolution, ...]
    enumerated_count: int
    distinct_count: int

    @property
    def unique(self) -> bool:
        return len(self.optima) == 1

    @property
    def optimum(self) -> KCutSolution:
        return self.optima[0]


@dataclass(frozen=True)
class CutTable:
    """All distinct partition-induced cuts of an instance.

    ``cross[r, e]`` says whether edge ``e`` is cut in row ``r``; ``weights``
    are integer weights scaled by ``scale``. Rows are in order of first
    occurrence during enumeration.
    """

    cross: np.ndarray
    assignments: np.ndarray
    weights: np.ndarray
    edge_weights: np.ndarray
    scale: int
    enumerated: int

    def __len__(self) -> int:
        return self.cross.shape[0]

    def solution(self, r: int) -> KCutSolution:
        return KCutSolution(
            tuple(int(a) for a in self.assignments[r]),
            frozenset(int(e) for e in np.flatnonzero(self.cross[r])),
            Fraction(int(self.weights[r]), self.scale),
        )

    def set_weights(self, mask: np.ndarray) -> np.ndarray:
        """Scaled weight of ``mask`` applied row-wise (mask shape ``(rows, m)``)."""
        return mask @ self.edge_weights


def check_budget(inst: Instance, budget: int = DEFAULT_BUDGET) -> None:
    free = inst.n - inst.k
    if free > budget:
        raise BudgetExceeded(free, budget)


def _scaled(inst: Instance) -> tuple[np.ndarray, int]:
    scale = math.lcm(*(w.denominator for _, _, w in inst.edges)) if inst.m else 1
    ints = [int(w * scale) for _, _, w in inst.edges]
    dtype = np.int64 if sum(ints) < 2**62 else object
    return np.array(ints, dtype=dtype), scale


def _chunks(inst: Instance) -> Iterator[np.ndarray]:
    """Assignment matrices in lexicographic order of the free vertices."""
    k, free = inst.k, inst.free_vertices
    f = len(free)
    inner = 0
    while inner < f and k ** (inner + 1) <= _CHUNK_ROWS:
        inner += 1
    outer = f - inner
    rows = k**inner
    base = np.zeros((rows, inst.n), dtype=np.int8)
    for i, t in enumerate(inst.terminals):
        base[:, t] = i
    idx = np.arange(rows)
    for j in range(inner):
        base[:, free[outer + j]] = (idx // k ** (inner - 1 - j)) % k
    for prefix in range(k**outer):
        block = base.copy()
        for j in range(outer):
            block[:, free[j]] = (prefix // k ** (outer - 1 - j)) % k
        yield block


@lru_cache(maxsize=16)
def _table(inst: Instance) -> CutTable:
    w, scale = _scaled(inst)
    us = np.array([u for u, _, _ in inst.edges], dtype=np.intp)
    vs = np.array([v for _, v, _ in inst.edges], dtype=np.intp)
    seen: dict[bytes, int] = {}
    crosses, assigns = [], []
    enumerated = 0
    for block in _chunks(inst):
        enumerated += block.shape[0]
        cross = block[:, us] != block[:, vs]
        packed = np.packbits(cross, axis=1) if inst.m else np.zeros((len(block), 1), np.uint8)
        _, first = np.unique(packed, axis=0, return_index=True)
        for r in np.sort(first):
            key = packed[r].tobytes()
            if key not in seen:
                seen[key] = len(seen)
                crosses.append(cross[r])
                assigns.append(block[r])
    cross = np.array(crosses, dtype=bool).reshape(len(crosses), inst.m)
    table = CutTable(
        cross=cross,
        assignments=np.array(assigns, dtype=np.int8),
        weights=cross @ w if inst.m else np.zeros(len(crosses), dtype=np.int64),
        edge_weights=w,
        scale=scale,
        enumerated=enumerated,
    )
    for arr in (table.cross, table.assignments, table.weights):
        arr.flags.writeable = False
    return table


def cut_table(inst: Instance, budget: int = DEFAULT_BUDGET) -> CutTable:
    check_budget(inst, budget)
    return _table(inst)


def enumerate_feasible_cuts(inst: Instance, budget: int = DEFAULT_BUDGET) -> Iterator[KCutSolution]:
    """Yield every distinct partition-induced cut once."""
    table = cut_table(inst, budget)
    for r in range(len(table)):
        yield table.solution(r)


def optimal_rows(table: CutTable) -> np.ndarray:
    best = table.weights.min()
    return np.flatnonzero(table.weights == best)


def solve_exact(inst: Instance, budget: int = DEFAULT_BUDGET) -> ExactResult:
    table = cut_table(inst, budget)
    rows = optimal_rows(table)
    optima = tuple(table.solution(int(r)) for r in rows)
    return ExactResult(optima[0].weight, optima, table.enumerated, len(table))
