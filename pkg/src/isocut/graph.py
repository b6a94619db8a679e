"""Weighted undirected graphs with terminals, and cut/partition algebra.

Weights are :class:`fractions.Fraction` throughout. Vertices are 0-based
integers; terminal ``i`` is ``inst.terminals[i]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class InputError(ValueError):
    """Raised for malformed instances or arguments."""


def as_fraction(value) -> Fraction:
    """Convert ints, Fractions, or decimal/``p/q`` strings exactly."""
    if isinstance(value, float):
        raise InputError(f"refusing inexact float weight {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"not a rational number: {value!r}") from exc


@dataclass(frozen=True)
class Instance:
    """A k-terminal cut instance.

    Edges are normalized on construction: endpoints ordered ``u < v``,
    parallel edges merged by summing weights, and the list sorted by
    ``(u, v)``. Edge ids are positions in that sorted list.
    """

    n: int
    edges: tuple[tuple[int, int, Fraction], ...]
    terminals: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError("negative vertex count")
        merged: dict[tuple[int, int], Fraction] = {}
        for u, v, w in self.edges:
            u, v, w = int(u), int(v), as_fraction(w)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if w <= 0:
                raise InputError(f"nonpositive weight {w} on edge ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, Fraction(0)) + w
        edges = tuple((u, v, w) for (u, v), w in sorted(merged.items()))
        terminals = tuple(int(t) for t in self.terminals)
        k = len(terminals)
        if k < 2 or k > self.n:
            raise InputError(f"need 2 <= k <= n, got k={k}, n={self.n}")
        if len(set(terminals)) != k:
            raise InputError("terminals must be distinct")
        for t in terminals:
            if not 0 <= t < self.n:
                raise InputError(f"terminal {t} out of range")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "terminals", terminals)

    @property
    def k(self) -> int:
        return len(self.terminals)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbor, edge_id)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def terminal_index(self) -> dict[int, int]:
        return {t: i for i, t in enumerate(self.terminals)}

    @cached_property
    def free_vertices(self) -> tuple[int, ...]:
        ts = set(self.terminals)
        return tuple(v for v in range(self.n) if v not in ts)

    def weight(self, eid: int) -> Fraction:
        return self.edges[eid][2]

    def reweighted(self, weights: Sequence[Fraction]) -> "Instance":
        """Same graph and terminals with new per-edge weights."""
        if len(weights) != self.m:
            raise InputError("weight vector length does not match edge count")
        return Instance(
            self.n,
            tuple((u, v, w) for (u, v, _), w in zip(self.edges, weights)),
            self.terminals,
            name=self.name,
        )


@dataclass(frozen=True)
class KCutSolution:
    """A partition-induced k-terminal cut.

    ``assignment[v]`` is the 0-based terminal index of vertex ``v``.
    """

    assignment: tuple[int, ...]
    cut_edges: frozenset[int]
    weight: Fraction

    def sorted_edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.cut_edges))


def _check_ids(inst: Instance, es: Iterable[int]) -> frozenset[int]:
    es = frozenset(es)
    for eid in es:
        if not (isinstance(eid, int) and 0 <= eid < inst.m):
            raise InputError(f"invalid edge id {eid!r}")
    return es


def cut_weight(inst: Instance, es: Iterable[int]) -> Fraction:
    """Total weight of the edge ids in ``es``."""
    es = _check_ids(inst, es)
    return sum((inst.edges[e][2] for e in es), Fraction(0))


def boundary(inst: Instance, side: Iterable[int]) -> frozenset[int]:
    """Edges with exactly one endpoint in ``side``."""
    side = set(side)
    return frozenset(
        eid for eid, (u, v, _) in enumerate(inst.edges) if (u in side) != (v in side)
    )


def induced_cut(inst: Instance, assignment: Sequence[int] | Mapping[int, int]) -> KCutSolution:
    """The cut whose edges cross between parts of ``assignment``."""
    if isinstance(assignment, Mapping):
        try:
            assignment = [assignment[v] for v in range(inst.n)]
        except KeyError as exc:
            raise InputError(f"assignment missing vertex {exc.args[0]}") from None
    assignment = tuple(int(a) for a in assignment)
    if len(assignment) != inst.n:
        raise InputError("assignment must cover every vertex")
    for v, a in enumerate(assignment):
        if not 0 <= a < inst.k:
            raise InputError(f"vertex {v} assigned to invalid index {a}")
    for i, t in enumerate(inst.terminals):
        if assignment[t] != i:
            raise InputError(f"terminal {i} assigned to foreign index {assignment[t]}")
    cut = frozenset(
        eid for eid, (u, v, _) in enumerate(inst.edges) if assignment[u] != assignment[v]
    )
    return KCutSolution(assignment, cut, cut_weight(inst, cut))


def components(inst: Instance, removed: Iterable[int] = ()) -> list[int]:
    """Component label per vertex after deleting ``removed`` edges."""
    removed = set(removed)
    label = [-1] * inst.n
    current = 0
    for root in range(inst.n):
        if label[root] != -1:
            continue
        label[root] = current
        stack = [root]
        while stack:
            u = stack.pop()
            for v, eid in inst.adjacency[u]:
                if eid not in removed and label[v] == -1:
                    label[v] = current
                    stack.append(v)
        current += 1
    return label


def is_feasible_cut(inst: Instance, es: Iterable[int]) -> bool:
    """True iff deleting ``es`` separates every pair of terminals."""
    es = _check_ids(inst, es)
    label = components(inst, es)
    return len({label[t] for t in inst.terminals}) == inst.k


def source_sets(inst: Instance, es: Iterable[int]) -> list[frozenset[int]]:
    """Vertices still connected to each terminal after deleting ``es``.

    Components without a terminal belong to no source set here.
    """
    label = components(inst, _check_ids(inst, es))
    return [
        frozenset(v for v in range(inst.n) if label[v] == label[t]) for t in inst.terminals
    ]
