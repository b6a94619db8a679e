"""Isolating cuts and the union-of-all-but-heaviest approximation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import InputError, Instance, cut_weight
from .mincut import min_st_cut


@dataclass(frozen=True)
class IsolatingCut:
    terminal: int  # 0-based terminal index
    source_side: frozenset[int]
    cut_edges: frozenset[int]
    weight: Fraction


@dataclass(frozen=True)
class IsoApproxSolution:
    cuts: tuple[IsolatingCut, ...]
    dropped: int
    cut_edges: frozenset[int]
    weight: Fraction


def isolating_cut(inst: Instance, i: int) -> IsolatingCut:
    """Source-minimal minimum cut between terminal ``i`` and all other terminals."""
    if not 0 <= i < inst.k:
        raise InputError(f"terminal index {i} out of range 0..{inst.k - 1}")
    t = inst.terminals[i]
    st = min_st_cut(inst, {t}, set(inst.terminals) - {t})
    return IsolatingCut(i, st.source_side, st.cut_edges, st.weight)


def iso_union_approx(inst: Instance) -> IsoApproxSolution:
    """Union of the k isolating cuts except one of maximum weight.

    Among equally heavy cuts the one with the largest terminal index is dropped.
    """
    cuts = tuple(isolating_cut(inst, i) for i in range(inst.k))
    heaviest = max(c.weight for c in cuts)
    dropped = max(c.terminal for c in cuts if c.weight == heaviest)
    union = frozenset().union(*(c.cut_edges for c in cuts if c.terminal != dropped))
    return IsoApproxSolution(cuts, dropped, union, cut_weight(inst, union))
