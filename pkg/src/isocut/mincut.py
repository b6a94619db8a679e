"""Exact minimum s-t cuts with source-minimal extraction."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import InputError, Instance, boundary, cut_weight


@dataclass(frozen=True)
class STCut:
    source_side: frozenset[int]
    cut_edges: frozenset[int]
    weight: Fraction


def _residual_bfs(inst: Instance, flow: list[Fraction], sources, sinks):
    """BFS over residual arcs from all sources.

    Returns ``(parent, hit)`` where ``hit`` is the first sink reached, or
    ``None``; ``parent[v] = (u, eid)`` records the arc used to reach ``v``.
    Flow on edge ``(u, v)`` is signed in the ``u -> v`` direction.
    """
    parent: dict[int, tuple[int, int] | None] = {s: None for s in sources}
    queue = deque(sorted(sources))
    while queue:
        u = queue.popleft()
        for v, eid in inst.adjacency[u]:
            if v in parent:
                continue
            a, _, w = inst.edges[eid]
            f = flow[eid] if a == u else -flow[eid]
            if w - f > 0:
                parent[v] = (u, eid)
                if v in sinks:
                    return parent, v
                queue.append(v)
    return parent, None


def min_st_cut(inst: Instance, sources: Iterable[int], sinks: Iterable[int]) -> STCut:
    """Minimum cut separating ``sources`` from ``sinks``.

    Multi-vertex sides behave as if contracted into one super vertex. The
    returned source side is the set reachable from the sources in the final
    residual network, which is contained in every minimum cut's source side.
    """
    sources, sinks = frozenset(sources), frozenset(sinks)
    if not sources or not sinks:
        raise InputError("sources and sinks must be nonempty")
    if sources & sinks:
        raise InputError("sources and sinks overlap")
    for v in sources | sinks:
        if not 0 <= v < inst.n:
            raise InputError(f"vertex {v} out of range")

    flow = [Fraction(0)] * inst.m
    value = Fraction(0)
    while True:
        parent, hit = _residual_bfs(inst, flow, sources, sinks)
        if hit is None:
            break
        path = []
        v = hit
        while parent[v] is not None:
            u, eid = parent[v]
            path.append((u, eid))
            v = u
        delta = None
        for u, eid in path:
            a, _, w = inst.edges[eid]
            r = w - flow[eid] if a == u else w + flow[eid]
            delta = r if delta is None else min(delta, r)
        for u, eid in path:
            if inst.edges[eid][0] == u:
                flow[eid] += delta
            else:
                flow[eid] -= delta
        value += delta

    side = frozenset(parent)
    cut = boundary(inst, side)
    weight = cut_weight(inst, cut)
    assert weight == value, "max-flow/min-cut mismatch"
    return STCut(side, cut, weight)
