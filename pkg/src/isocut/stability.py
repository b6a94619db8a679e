"""Perturbation stability of k-terminal cut instances.

An instance with a unique optimum OPT is gamma-stable exactly when every
other feasible cut ALT has ``w(ALT - OPT) > gamma * w(OPT - ALT)``. The
stability factor ``gamma_star`` is the smallest such ratio, so the instance
is gamma-stable for ``1 < gamma < gamma_star`` and at no larger gamma.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np

from .exact import DEFAULT_BUDGET, cut_table, optimal_rows, solve_exact
from .graph import InputError, Instance, KCutSolution, as_fraction

INF = float("inf")


@dataclass(frozen=True)
class StabilityReport:
    gamma_star: Fraction | float
    witness: KCutSolution | None
    optima_count: int
    opt: KCutSolution

    @property
    def unique(self) -> bool:
        return self.optima_count == 1

    def is_stable(self, gamma) -> bool:
        return self.unique and as_fraction(gamma) < self.gamma_star

    def interval_text(self) -> str:
        if not self.unique:
            return "none"
        if self.gamma_star <= 1:
            return "none"
        if self.gamma_star == INF:
            return "(1, inf)"
        return f"(1, {self.gamma_star})"


def stability_factor(inst: Instance, budget: int = DEFAULT_BUDGET) -> StabilityReport:
    """Exact minimum of ``w(ALT - OPT) / w(OPT - ALT)`` over alternatives.

    Alternatives containing OPT are skipped. Ties in the ratio go to the
    lexicographically smallest witness edge set.
    """
    table = cut_table(inst, budget)
    opt_rows = optimal_rows(table)
    o = int(opt_rows[0])
    opt_mask = table.cross[o]
    gained = table.set_weights(table.cross & ~opt_mask)  # w(ALT - OPT)
    lost = table.set_weights(~table.cross & opt_mask)  # w(OPT - ALT)

    best = None
    for r in np.flatnonzero(lost > 0):
        r = int(r)
        a, b = int(gained[r]), int(lost[r])
        if best is None:
            best = (a, b, r)
            continue
        ba, bb, br = best
        lhs, rhs = a * bb, ba * b
        if lhs < rhs or (lhs == rhs and _edge_key(table, r) < _edge_key(table, br)):
            best = (a, b, r)

    if best is None:
        gamma_star, witness = INF, None
    else:
        gamma_star, witness = Fraction(best[0], best[1]), table.solution(best[2])
    return StabilityReport(gamma_star, witness, len(opt_rows), table.solution(o))


def _edge_key(table, r: int) -> tuple[int, ...]:
    return tuple(int(e) for e in np.flatnonzero(table.cross[r]))


def is_gamma_stable(inst: Instance, gamma, budget: int = DEFAULT_BUDGET) -> bool:
    gamma = as_fraction(gamma)
    if gamma <= 1:
        raise InputError("gamma must exceed 1")
    return stability_factor(inst, budget).is_stable(gamma)


@dataclass(frozen=True)
class PerturbationSpec:
    """Per-edge multipliers in ``[1, gamma]``."""

    gamma: Fraction
    multipliers: Mapping[int, Fraction] = field(default_factory=dict)
    mode: str = "explicit"
    seed: int | None = None

    def multiplier(self, eid: int) -> Fraction:
        return self.multipliers.get(eid, Fraction(1))

    @classmethod
    def worst_case(cls, inst: Instance, gamma, budget: int = DEFAULT_BUDGET, opt=None):
        """Multiply the optimal cut's edges by gamma and leave the rest."""
        gamma = as_fraction(gamma)
        if opt is None:
            opt = solve_exact(inst, budget).optimum
        return cls(gamma, {e: gamma for e in sorted(opt.cut_edges)}, "worst")

    @classmethod
    def random(cls, inst: Instance, gamma, seed: int, denominator: int = 64):
        gamma = as_fraction(gamma)
        rng = random.Random(seed)
        mult = {
            e: 1 + (gamma - 1) * Fraction(rng.randint(0, denominator), denominator)
            for e in range(inst.m)
        }
        return cls(gamma, mult, "random", seed)


def apply_perturbation(inst: Instance, spec: PerturbationSpec) -> Instance:
    gamma = as_fraction(spec.gamma)
    weights = []
    for eid, (_, _, w) in enumerate(inst.edges):
        mu = as_fraction(spec.multiplier(eid))
        if not 1 <= mu <= gamma:
            raise InputError(f"multiplier {mu} on edge {eid} outside [1, {gamma}]")
        weights.append(w * mu)
    for eid in spec.multipliers:
        if not 0 <= eid < inst.m:
            raise InputError(f"invalid edge id {eid}")
    return inst.reweighted(weights)


def survives_perturbation(inst: Instance, spec: PerturbationSpec, opt_edges, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether ``opt_edges`` is still the unique optimum after perturbing."""
    res = solve_exact(apply_perturbation(inst, spec), budget)
    return res.unique and res.optimum.cut_edges == frozenset(opt_edges)
