"""Acceptance criteria, one test per criterion, all exact (zero tolerance).

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary prints
one PASS/FAIL line per criterion.
"""
import json
import random
from fractions import Fraction

import pytest

from isocut import (
    PerturbationSpec,
    Instance,
    induced_cut,
    is_gamma_stable,
    iso_union_approx,
    isolating_cut,
    min_st_cut,
    parse_instance,
    random_instance,
    serialize_instance,
    solve_exact,
    stability_factor,
    tight_instance,
    tight_params,
    verify_theorem1,
)
from isocut.generators import paired_assignment
from isocut.io import dumps
from isocut.stability import survives_perturbation
from isocut.verify import SweepParams, sweep

from .oracles import brute_min_st_cut
from .strategies import star

SWEEP_COUNT = 240
SWEEP_SEED = 2024
SWEEP_PARAMS = SweepParams(
    n_values=tuple(range(6, 13)),
    k_values=(3, 4),
    edge_probability=Fraction(2, 5),
    weight_range=(Fraction(1), Fraction(1000)),
    max_free=8,
)
GAMMA_GRID = [Fraction(5, 4), Fraction(3, 2), Fraction(2), Fraction(3)]


@pytest.fixture(scope="module")
def report():
    return sweep(SWEEP_COUNT, SWEEP_PARAMS, seed=SWEEP_SEED, jobs=2)


@pytest.fixture(scope="module")
def sweep_instances(report):
    p = SWEEP_PARAMS
    return [
        random_instance(r["n"], r["k"], p.edge_probability, p.weight_range, r["seed"])
        for r in report["instances"]
    ]


@pytest.mark.criterion(1, "G_3(1/2): a,b,c = 1,9,4; OPT 27 unique; Q_i = {t_i} at 17; E_ISO 34 > 27, 34/27 <= 4/3")
def test_theorem2_reproduction():
    k, eps = 3, Fraction(1, 2)
    p = tight_params(k, eps)
    assert (p.a, p.b, p.c) == (1, 9, 4)
    g3 = tight_instance(k, eps)
    res = solve_exact(g3)
    assert res.optimum_weight == 27
    assert res.unique
    assert res.optimum.cut_edges == induced_cut(g3, paired_assignment(k)).cut_edges
    for i in range(k):
        cut = isolating_cut(g3, i)
        assert cut.source_side == {i}
        assert cut.weight == 17
    iso = iso_union_approx(g3)
    assert iso.weight == 34
    assert iso.weight / res.optimum_weight <= 2 - Fraction(2, k)
    assert iso.weight > res.optimum_weight


@pytest.mark.criterion(2, "gamma_star(G_3(1/2)) = 18/11 by brute force and by b/(c + k a/2); 3/2 < 18/11 < 2")
def test_stability_factor_g3():
    k, eps = 3, Fraction(1, 2)
    p = tight_params(k, eps)
    gamma_star = stability_factor(tight_instance(k, eps)).gamma_star
    closed_form = p.b / (p.c + Fraction(k, 2) * p.a)
    assert gamma_star == Fraction(18, 11) == closed_form
    assert k - 1 - eps < gamma_star < k - 1


@pytest.mark.criterion(3, f"{SWEEP_COUNT} random instances, n-k <= 8, k in {{3,4}}: every (k-1)-stable one has Q_i = S_i*")
def test_theorem1_sweep(report):
    s = report["summary"]
    records = report["instances"]
    assert s["instances"] >= 200 and s["errors"] == 0
    assert all(r["n"] - r["k"] <= 8 and r["k"] in (3, 4) for r in records)
    stable = [r for r in records if r["premise"]]
    assert stable, "sweep produced no (k-1)-stable instance"
    assert all(r["conclusion"] for r in stable)
    assert s["implication_failures"] == 0
    print(f"\n(k-1)-stable instances: {len(stable)} of {len(records)}")


@pytest.mark.criterion(4, "weight(E_ISO)/OPT <= 2 - 2/k on every sweep instance")
def test_lemma2_bound(report):
    for r in report["instances"]:
        assert Fraction(r["ratio"]) <= 2 - Fraction(2, r["k"]), r["id"]
    assert report["summary"]["lemma2_violations"] == 0


@pytest.mark.criterion(5, "Q_i inside some optimal S_i, simultaneously when OPT is unique")
def test_lemma3_containment(report):
    assert all(r["lemma3"] for r in report["instances"])
    assert report["summary"]["lemma3_violations"] == 0


@pytest.mark.criterion(6, "is_gamma_stable agrees with worst-case perturbation replay on 60 instances x gamma grid")
def test_lemma1_equivalence(sweep_instances):
    positives = negatives = 0
    for inst in sweep_instances[:60]:
        rep = stability_factor(inst)
        for gamma in GAMMA_GRID:
            predicted = is_gamma_stable(inst, gamma)
            spec = PerturbationSpec.worst_case(inst, gamma, opt=rep.opt)
            replay = survives_perturbation(inst, spec, rep.opt.cut_edges)
            assert predicted == replay, (inst.name, gamma)
            positives += predicted
            negatives += not predicted
    assert positives and negatives


def _tie_instances():
    return [random_instance(7, 3, Fraction(1, 2), (1, 1), seed) for seed in range(40)]


@pytest.mark.criterion(7, "stability is a threshold in gamma; instances with >= 2 optima are never stable")
def test_facts(sweep_instances):
    grid = sorted({Fraction(p, q) for p in range(5, 41) for q in (4, 5)} | set(GAMMA_GRID))
    grid = [g for g in grid if g > 1]
    multi = 0
    for inst in sweep_instances + _tie_instances() + [star(2), star(3)]:
        rep = stability_factor(inst)
        verdicts = [rep.is_stable(g) for g in grid]
        assert verdicts == sorted(verdicts, reverse=True)
        if rep.optima_count > 1:
            multi += 1
            assert not any(verdicts)
            assert rep.gamma_star <= 1
    assert multi > 0


@pytest.mark.criterion(8, "min_st_cut weight and minimal source side match enumeration on 100 graphs, n <= 8")
def test_mincut_engine():
    rng = random.Random(8)
    for seed in range(100):
        n = rng.randint(3, 8)
        inst = random_instance(n, 2, Fraction(1, 2), (Fraction(1, 2), Fraction(9, 2)), seed)
        verts = list(range(n))
        rng.shuffle(verts)
        a = rng.randint(1, n - 1)
        b = rng.randint(1, n - a)
        sources, sinks = set(verts[:a]), set(verts[a:a + b])
        weight, minimal, _ = brute_min_st_cut(inst, sources, sinks)
        cut = min_st_cut(inst, sources, sinks)
        assert cut.weight == weight
        assert cut.source_side == minimal


@pytest.mark.criterion(9, "S(1,1,3) passes Theorem 1 with gamma_star 3; S(1,1,2) has gamma_star 2 and Q_3 != S_3*")
def test_small_stars():
    audit = verify_theorem1(star(3))
    assert audit.gamma_star == 3
    assert audit.premise_holds and audit.conclusion_holds and audit.passed
    audit = verify_theorem1(star(2))
    assert audit.gamma_star == 2
    assert not audit.premise_holds and audit.passed
    t3 = audit.details["terminals"][2]
    assert t3["Q"] == [3] and t3["S_opt"] == [3, 4]


@pytest.mark.criterion(10, "parse(serialize(x)) = x on generated instances; equal seeds give byte-identical sweeps")
def test_round_trip_and_determinism(report, sweep_instances):
    generated = sweep_instances + _tie_instances() + [
        tight_instance(k, eps) for k, eps in [(3, Fraction(1, 2)), (4, Fraction(1, 10)), (6, Fraction(7, 3))]
    ]
    for inst in generated:
        text = serialize_instance(inst)
        assert parse_instance(text) == inst
        assert serialize_instance(parse_instance(text)) == text
    again = sweep(SWEEP_COUNT, SWEEP_PARAMS, seed=SWEEP_SEED, jobs=1)
    assert dumps(again) == dumps(report)
    assert json.loads(dumps(report)) == json.loads(dumps(again))
