from .checks import (
    CheckResult,
    ContradictionReport,
    contradiction_checks,
    marginal_floor,
)
from .distance import METRICS, distance, l2_distance, total_variation
from .noise import LocalNoiseModel, apply_local_noise
from .search import FeasibilityReport, best_bob, search_feasibility
from .targets import probe_marginal, source_table, target_table
