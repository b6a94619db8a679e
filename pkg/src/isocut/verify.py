"""Executable audits: isolating cuts versus exact optima on stable instances."""
from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import DEFAULT_BUDGET, BudgetExceeded, ExactResult, solve_exact
from .generators import (
    TightParamsError,
    paired_assignment,
    random_instance,
    tight_instance_from,
    tight_params,
)
from .graph import InputError, Instance, induced_cut, source_sets
from .io import format_rational
from .isolating import IsoApproxSolution, iso_union_approx
from .stability import stability_factor

log = logging.getLogger(__name__)


@dataclass
class TheoremAudit:
    instance_id: str
    gamma_star: Fraction | float | None = None
    premise_holds: bool = False
    conclusion_holds: bool = False
    details: dict = field(default_factory=dict)
    notices: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        if self.error is not None:
            return False
        return self.conclusion_holds or not self.premise_holds

    @property
    def severity(self) -> str:
        if self.error is not None:
            return "error"
        if not self.passed:
            return "counterexample"
        return "ok" if self.premise_holds else "vacuous"

    def to_doc(self) -> dict:
        return {
            "instance": self.instance_id,
            "gamma_star": None if self.gamma_star is None else format_rational(self.gamma_star),
            "premise_holds": self.premise_holds,
            "conclusion_holds": self.conclusion_holds,
            "passed": self.passed,
            "severity": self.severity,
            "details": self.details,
            "notices": self.notices,
            "error": self.error,
        }


def _vs(vs) -> list[int]:
    return sorted(v + 1 for v in vs)


def lemma2_holds(inst: Instance, iso: IsoApproxSolution, opt_weight: Fraction) -> bool:
    return iso.weight <= (2 - Fraction(2, inst.k)) * opt_weight


def lemma3_holds(inst: Instance, iso: IsoApproxSolution, exact: ExactResult) -> bool:
    """Each Q_i lies in the i-th source set of some optimum (of the same one, if unique)."""
    parts = [source_sets(inst, sol.cut_edges) for sol in exact.optima]
    return all(
        any(cut.source_side <= p[cut.terminal] for p in parts) for cut in iso.cuts
    )


def verify_theorem1(inst: Instance, budget: int = DEFAULT_BUDGET, instance_id: str | None = None) -> TheoremAudit:
    """Check that a (k-1)-stable instance has Q_i equal to S_i* for every i."""
    audit = TheoremAudit(instance_id or inst.name or "instance")
    stab = stability_factor(inst, budget)
    iso = iso_union_approx(inst)
    opt = stab.opt
    optimal_sets = source_sets(inst, opt.cut_edges)
    k = inst.k

    audit.gamma_star = stab.gamma_star
    audit.premise_holds = stab.is_stable(k - 1)
    per_terminal = []
    for cut, s in zip(iso.cuts, optimal_sets):
        per_terminal.append(
            {"terminal": cut.terminal + 1, "Q": _vs(cut.source_side), "S_opt": _vs(s), "equal": cut.source_side == s}
        )
    audit.conclusion_holds = stab.unique and all(d["equal"] for d in per_terminal)
    audit.details = {
        "k": k,
        "optima_count": stab.optima_count,
        "optimum_weight": format_rational(opt.weight),
        "iso_weight": format_rational(iso.weight),
        "iso_is_optimum": iso.cut_edges == opt.cut_edges,
        "terminals": per_terminal,
    }
    if not audit.passed:
        log.error("COUNTEREXAMPLE: %s is (k-1)-stable but Q_i != S_i*", audit.instance_id)
    return audit


def verify_theorem2(k: int, eps, budget: int = DEFAULT_BUDGET, a=None, b=None, c=None) -> TheoremAudit:
    """Check the tight construction: trivial isolating cuts, stable, suboptimal union."""
    audit = TheoremAudit(f"G_{k}(eps={eps})")
    try:
        p = tight_params(k, eps, a, b, c)
        inst = tight_instance_from(p)
    except TightParamsError as exc:
        audit.error = str(exc)
        return audit
    audit.premise_holds = True
    checks: dict[str, bool] = {}

    iso = iso_union_approx(inst)
    checks["trivial_isolating_cuts"] = all(
        cut.source_side == {inst.terminals[cut.terminal]} for cut in iso.cuts
    )
    paired = induced_cut(inst, paired_assignment(k))
    checks["paired_weight_matches_formula"] = paired.weight == p.optimum_weight
    checks["iso_suboptimal"] = iso.weight > paired.weight
    details = {
        "k": k,
        "eps": format_rational(p.eps),
        "a": format_rational(p.a),
        "b": format_rational(p.b),
        "c": format_rational(p.c),
        "paired_weight": format_rational(paired.weight),
        "iso_weight": format_rational(iso.weight),
        "isolating_weights": [format_rational(cut.weight) for cut in iso.cuts],
    }
    try:
        stab = stability_factor(inst, budget)
    except BudgetExceeded as exc:
        audit.notices.append(f"stability and uniqueness checks skipped: {exc}")
    else:
        audit.gamma_star = stab.gamma_star
        checks["paired_is_unique_optimum"] = stab.unique and stab.opt.cut_edges == paired.cut_edges
        checks["stable_at_target"] = stab.is_stable(p.gamma)
        checks["not_k_minus_1_stable"] = not stab.is_stable(k - 1)
    details["checks"] = checks
    audit.details = details
    audit.conclusion_holds = all(checks.values())
    return audit


@dataclass(frozen=True)
class SweepParams:
    n_values: tuple[int, ...] = (6, 7, 8)
    k_values: tuple[int, ...] = (3, 4)
    edge_probability: Fraction = Fraction(1, 2)
    weight_range: tuple[Fraction, Fraction] = (Fraction(1), Fraction(10))
    max_free: int | None = None  # cap on n - k


def sweep_instances(count: int, params: SweepParams, seed: int) -> list[tuple[str, int, int, int]]:
    """``(id, n, k, instance_seed)`` for each sweep instance, reproducibly."""
    rng = random.Random(seed)
    out = []
    for idx in range(count):
        k = rng.choice(params.k_values)
        ns = [n for n in params.n_values if n >= k and (params.max_free is None or n - k <= params.max_free)]
        if not ns:
            raise InputError(f"no admissible n for k={k}")
        n = rng.choice(ns)
        out.append((f"{idx:05d}", n, k, rng.getrandbits(32)))
    return out


def _audit_one(job) -> dict:
    (iid, n, k, iseed), params, budget = job
    rec = {"id": iid, "n": n, "k": k, "seed": iseed}
    try:
        inst = random_instance(n, k, params.edge_probability, params.weight_range, iseed)
        exact = solve_exact(inst, budget)
        audit = verify_theorem1(inst, budget, iid)
        iso = iso_union_approx(inst)
    except (InputError, BudgetExceeded) as exc:
        rec["error"] = str(exc)
        return rec
    bound = 2 - Fraction(2, k)
    ratio = iso.weight / exact.optimum_weight
    rec.update(
        m=inst.m,
        gamma_star=format_rational(audit.gamma_star),
        optima_count=len(exact.optima),
        premise=audit.premise_holds,
        conclusion=audit.conclusion_holds,
        passed=audit.passed,
        opt_weight=format_rational(exact.optimum_weight),
        iso_weight=format_rational(iso.weight),
        ratio=format_rational(ratio),
        lemma2=ratio <= bound,
        lemma3=lemma3_holds(inst, iso, exact),
    )
    return rec


def sweep(count: int, params: SweepParams = SweepParams(), budget: int = DEFAULT_BUDGET, seed: int = 0, jobs: int = 1) -> dict:
    """Audit ``count`` seeded random instances; returns a JSON-ready report."""
    work = [(spec, params, budget) for spec in sweep_instances(count, params, seed)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_audit_one, work, chunksize=4))
    else:
        records = [_audit_one(w) for w in work]
    records.sort(key=lambda r: r["id"])

    ok = [r for r in records if "error" not in r]
    max_ratio: dict[str, Fraction] = {}
    for r in ok:
        key = str(r["k"])
        max_ratio[key] = max(max_ratio.get(key, Fraction(0)), Fraction(r["ratio"]))
    return {
        "params": {
            "count": count,
            "seed": seed,
            "budget": budget,
            "n_values": list(params.n_values),
            "k_values": list(params.k_values),
            "edge_probability": format_rational(params.edge_probability),
            "weight_range": [format_rational(w) for w in params.weight_range],
            "max_free": params.max_free,
        },
        "summary": {
            "instances": len(records),
            "errors": len(records) - len(ok),
            "premise_count": sum(r["premise"] for r in ok),
            "implication_failures": sum(not r["passed"] for r in ok),
            "lemma2_violations": sum(not r["lemma2"] for r in ok),
            "lemma3_violations": sum(not r["lemma3"] for r in ok),
            "max_ratio_by_k": {k: format_rational(v) for k, v in sorted(max_ratio.items())},
        },
        "instances": records,
    }


def sweep_ok(report: dict) -> bool:
    s = report["summary"]
    return s["implication_failures"] == 0 and s["lemma2_violations"] == 0 and s["lemma3_violations"] == 0
