"""Instance generators: the tight family G_k(eps) and seeded random graphs.

G_k has terminals t_1..t_k (vertices 0..k-1) and partners s_1..s_k
(vertices k..2k-1). Partner pairs s_i-s_j weigh ``a``, t_i-s_i weighs ``b``
and t_i-s_j (i != j) weighs ``c``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .graph import InputError, Instance, as_fraction, components


class TightParamsError(InputError):
    pass


@dataclass(frozen=True)
class TightParams:
    k: int
    eps: Fraction
    a: Fraction
    b: Fraction
    c: Fraction

    @property
    def gamma(self) -> Fraction:
        """The stability level the construction targets, ``k - 1 - eps``."""
        return self.k - 1 - self.eps

    @property
    def optimum_weight(self) -> Fraction:
        """Weight of the cut keeping every s_i with t_i."""
        k = self.k
        return k * (k - 1) // 2 * self.a + k * (k - 1) * self.c


def tight_params(k: int, eps, a=None, b=None, c=None) -> TightParams:
    """Closed-form weights for G_k(eps), unless overridden."""
    eps = as_fraction(eps)
    if k < 3:
        raise TightParamsError(f"k must be at least 3, got {k}")
    if eps <= 0:
        raise TightParamsError(f"eps must be positive, got {eps}")
    gamma = k - 1 - eps
    a = 2 * eps if a is None else as_fraction(a)
    b = k * (k - 1) * gamma if b is None else as_fraction(b)
    c = k * gamma - eps if c is None else as_fraction(c)
    return TightParams(k, eps, a, b, c)


@dataclass(frozen=True)
class ParamCheck:
    ok: bool
    stability_lhs: Fraction  # b
    stability_rhs: Fraction  # gamma * (c + k/2 * a)
    isolation_lhs: Fraction  # b
    isolation_rhs: Fraction  # (k - 1) * (a + c)
    violated: tuple[str, ...]

    def describe(self) -> str:
        return (
            f"stability: {self.stability_lhs} > {self.stability_rhs} "
            f"is {self.stability_lhs > self.stability_rhs}; "
            f"isolation: {self.isolation_lhs} < {self.isolation_rhs} "
            f"is {self.isolation_lhs < self.isolation_rhs}"
        )


def validate_tight_params(p: TightParams, gamma=None) -> ParamCheck:
    """Check ``b > gamma (c + k a / 2)`` and ``b < (k - 1)(a + c)``.

    The first makes the paired partition the unique gamma-stable optimum;
    the second makes every isolating cut keep only its terminal.
    """
    gamma = p.gamma if gamma is None else as_fraction(gamma)
    violated = []
    for name, value in (("a", p.a), ("b", p.b), ("c", p.c)):
        if value <= 0:
            violated.append(f"positivity of {name}")
    s_rhs = gamma * (p.c + Fraction(p.k, 2) * p.a)
    i_rhs = (p.k - 1) * (p.a + p.c)
    if not p.b > s_rhs:
        violated.append("stability inequality b > gamma(c + k/2 a)")
    if not p.b < i_rhs:
        violated.append("isolation inequality b < (k-1)(a + c)")
    return ParamCheck(not violated, p.b, s_rhs, p.b, i_rhs, tuple(violated))


def tight_instance_from(p: TightParams) -> Instance:
    if p.gamma <= 1:
        raise TightParamsError(f"eps={p.eps} leaves target gamma={p.gamma} <= 1")
    check = validate_tight_params(p)
    if not check.ok:
        raise TightParamsError(
            "construction rejected, violated: " + "; ".join(check.violated)
        )
    k = p.k
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            edges.append((k + i, k + j, p.a))
    for i in range(k):
        for j in range(k):
            edges.append((i, k + j, p.b if i == j else p.c))
    return Instance(2 * k, tuple(edges), tuple(range(k)), name=f"G_{k}(eps={p.eps})")


def tight_instance(k: int, eps, a=None, b=None, c=None) -> Instance:
    return tight_instance_from(tight_params(k, eps, a, b, c))


def paired_assignment(k: int) -> tuple[int, ...]:
    """Assignment sending t_i and s_i to part i."""
    return tuple(range(k)) * 2


MAX_RETRIES = 100


def _draw_weight(rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
    q = lo.denominator * hi.denominator
    return Fraction(rng.randint(int(lo * q), int(hi * q)), q)


def random_instance(n: int, k: int, edge_probability=Fraction(1, 2), weight_range=(1, 10), seed: int = 0) -> Instance:
    """Seeded G(n, p) graph with uniform rational weights, terminals 0..k-1.

    Weights are drawn from the grid with step ``1/(den(lo) * den(hi))`` on
    ``[lo, hi]``, so integer bounds give integer weights. Graphs leaving
    some terminal pair disconnected are redrawn.
    """
    p = as_fraction(edge_probability)
    lo, hi = (as_fraction(x) for x in weight_range)
    if not 2 <= k <= n:
        raise InputError(f"need 2 <= k <= n, got k={k}, n={n}")
    if not 0 < p <= 1:
        raise InputError(f"edge probability must be in (0, 1], got {p}")
    if not 0 < lo <= hi:
        raise InputError(f"weight range must satisfy 0 < lo <= hi, got [{lo}, {hi}]")
    rng = random.Random(seed)
    for attempt in range(MAX_RETRIES):
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if p == 1 or rng.random() < p:
                    edges.append((u, v, _draw_weight(rng, lo, hi)))
        inst = Instance(n, tuple(edges), tuple(range(k)), name=f"random(n={n},k={k},seed={seed})")
        label = components(inst)
        if len({label[t] for t in range(k)}) == 1:
            return inst
    raise InputError(f"no instance with connected terminals after {MAX_RETRIES} attempts")
