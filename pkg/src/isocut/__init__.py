"""Isolating cuts, exact multiway cuts and perturbation stability."""
from .exact import BudgetExceeded, ExactResult, enumerate_feasible_cuts, solve_exact
from .generators import random_instance, tight_instance, tight_params, validate_tight_params
from .graph import (
    InputError,
    Instance,
    KCutSolution,
    cut_weight,
    induced_cut,
    is_feasible_cut,
    source_sets,
)
from .io import ParseError, parse_instance, serialize_instance
from .isolating import IsoApproxSolution, IsolatingCut, isolating_cut, iso_union_approx
from .mincut import STCut, min_st_cut
from .stability import (
    PerturbationSpec,
    StabilityReport,
    apply_perturbation,
    is_gamma_stable,
    stability_factor,
)
from .verify import TheoremAudit, sweep, verify_theorem1, verify_theorem2

__version__ = "0.1.0"
