"""
Numerical search for a local noise model reproducing the amplitude
damping statistics.

For a fixed effective map on Alice's bit the output table is linear in
Bob's two conditional columns, so the best Bob map is found exactly
(a linear program for total variation, a constrained least squares
for L2). Only Alice's effective map (g, h) is searched, first on a
grid and then by coordinate descent from the best grid points.
Mixtures with the coins add nothing: any mixture equals an effective
conditional map.
"""
from contextlib import closing
from dataclasses import dataclass
from functools import partial
from itertools import product
from multiprocessing import Pool
from typing import List, Tuple

import numpy as np
from scipy.optimize import linprog, minimize
from tqdm import tqdm
from wasabi import msg

from ..defaults import config, get_jobs
from ..errors import Errors, ParameterError
from .checks import marginal_floor
from .distance import check_metric, distance
from .noise import BOB_OUTCOMES, LocalNoiseModel, apply_local_noise
from .targets import source_table, target_table

Point = Tuple[float, float]


@dataclass(frozen=True, eq=False)
class FeasibilityReport:
    p: float
    metric: str
    distance: float
    model: LocalNoiseModel
    evaluations: int
    budget: int
    exhausted: bool
    marginal_floor: float

    def to_dict(self):
        return {
            "p": self.p,
            "metric": self.metric,
            "distance": self.distance,
            "model": self.model.to_dict(),
            "evaluations": self.evaluations,
            "budget": self.budget,
            "exhausted": self.exhausted,
            "marginal_floor": self.marginal_floor,
        }


def _alice_output(source: np.ndarray, point: Point) -> np.ndarray:
    g, h = point
    alice = np.array([[g, h], [1 - g, 1 - h]])
    return np.einsum("xa,aeb->xeb", alice, source)


def _bob_design(alice_out: np.ndarray):
    """
    Write the output table as K w + c, with w stacking Bob's columns
    for inputs 0 and 1. Inputs 2 and 3 pass through.
    """
    n_a, n_e, _ = alice_out.shape
    K = np.zeros((n_a, n_e, BOB_OUTCOMES, 2 * BOB_OUTCOMES))
    c = np.zeros((n_a, n_e, BOB_OUTCOMES))
    for y in range(BOB_OUTCOMES):
        K[:, :, y, y] = alice_out[:, :, 0]
        K[:, :, y, BOB_OUTCOMES + y] = alice_out[:, :, 1]
    c[:, :, 2:] = alice_out[:, :, 2:]
    return K.reshape(-1, 2 * BOB_OUTCOMES), c.ravel()


def _simplex_constraints():
    A_eq = np.zeros((2, 2 * BOB_OUTCOMES))
    A_eq[0, :BOB_OUTCOMES] = 1
    A_eq[1, BOB_OUTCOMES:] = 1
    return A_eq, np.ones(2)


def _solve_tv(K, c, target) -> Tuple[float, np.ndarray]:
    n_cells, n_w = K.shape
    eye = np.eye(n_cells)
    A_ub = np.block([[K, -eye], [-K, -eye]])
    b_ub = np.concatenate([target - c, c - target])
    A_eq, b_eq = _simplex_constraints()
    A_eq = np.hstack([A_eq, np.zeros((2, n_cells))])
    cost = np.concatenate([np.zeros(n_w), np.full(n_cells, 0.5)])
    bounds = [(0, 1)] * n_w + [(0, None)] * n_cells
    res = linprog(
        cost, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq,
        bounds=bounds, method="highs",
    )
    return max(0.0, float(res.fun)), res.x[:n_w]


def _solve_l2(K, c, target) -> Tuple[float, np.ndarray]:
    n_w = K.shape[1]
    residual = c - target
    A_eq, b_eq = _simplex_constraints()

    def fun(w):
        r = K @ w + residual
        return r @ r

    def jac(w):
        return 2 * K.T @ (K @ w + residual)

    res = minimize(
        fun,
        np.full(n_w, 1 / BOB_OUTCOMES),
        jac=jac,
        method="SLSQP",
        bounds=[(0, 1)] * n_w,
        constraints={"type": "eq", "fun": lambda w: A_eq @ w - b_eq},
        options={"ftol": 1e-14, "maxiter": 500},
    )
    w = np.clip(res.x, 0, 1)
    w[:BOB_OUTCOMES] /= w[:BOB_OUTCOMES].sum()
    w[BOB_OUTCOMES:] /= w[BOB_OUTCOMES:].sum()
    return float(np.sqrt(fun(w))), w


def best_bob(
    point: Point, source: np.ndarray, target: np.ndarray, metric: str
) -> Tuple[float, np.ndarray]:
    """
    Smallest distance reachable with Alice's effective map `point`,
    and Bob's columns achieving it.
    """
    K, c = _bob_design(_alice_output(source, point))
    solve = _solve_tv if metric == "tv" else _solve_l2
    return solve(K, c, np.asarray(target).ravel())


def _objective(point, source, target, metric) -> float:
    return best_bob(point, source, target, metric)[0]


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.spent = 0

    @property
    def exhausted(self) -> bool:
        return self.spent >= self.limit

    def spend(self, n: int = 1):
        self.spent += n


def _grid(step: float) -> List[Point]:
    axis = np.round(np.arange(0.0, 1.0 + step / 2, step), 12)
    axis = np.clip(axis, 0.0, 1.0)
    return [(float(g), float(h)) for g, h in product(axis, axis)]


def _refine(point, value, objective, step, tol, budget) -> Tuple[Point, float]:
    """Coordinate descent with a halving step on the unit square."""
    x = list(point)
    while step >= tol and not budget.exhausted:
        improved = False
        for coord, sign in product((0, 1), (1, -1)):
            if budget.exhausted:
                break
            cand = list(x)
            cand[coord] = min(1.0, max(0.0, cand[coord] + sign * step))
            if cand == x:
                continue
            cand_value = objective(tuple(cand))
            budget.spend()
            if cand_value < value:
                x, value, improved = cand, cand_value, True
                break
        if not improved:
            step /= 2
    return tuple(x), value


def search_feasibility(
    p: float,
    metric: str = None,
    budget: int = None,
    seed: int = None,
    jobs: int = 1,
    verbose: bool = None,
    **kwargs,
) -> FeasibilityReport:
    """
    Minimize the distance between locally noised noiseless statistics
    and the amplitude damping statistics at `p`.

    Parameters
    ----------
    p : float
        Damping strength in [0, 1].
    metric : str, optional
        "tv" or "l2", by default from `config`.
    budget : int, optional
        Maximum number of objective evaluations, by default from
        `config`.
    seed : int, optional
        Seed of the extra random starting points, by default from
        `config`.
    jobs : int, optional
        Worker processes for the grid stage, by default 1.
    verbose : bool, optional
        Show progress, by default None.
    **kwargs
        Overrides of `grid_step`, `top_k`, `refine_tol`, `restarts`.

    Returns
    -------
    FeasibilityReport
        Best model and distance found. `exhausted` is set when the
        budget ran out before the refinement finished.
    """
    cfg = {**config, **kwargs}
    metric = check_metric(metric or cfg["metric"])
    limit = cfg["budget"] if budget is None else int(budget)
    if limit < 1:
        raise ParameterError(Errors.E053.format(budget=limit))
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(Errors.E052.format(p=p))
    seed = cfg["seed"] if seed is None else seed
    source, target = source_table(), target_table(p)
    objective = partial(
        _objective, source=source, target=target, metric=metric
    )
    spent = _Budget(limit)

    grid = _grid(cfg["grid_step"])[:limit]
    jobs = get_jobs(jobs)
    bar = partial(tqdm, total=len(grid), desc="grid", disable=not verbose)
    if jobs == 1:
        values = list(bar(map(objective, grid)))
    else:
        with closing(Pool(jobs)) as pool:
            values = list(bar(pool.imap(objective, grid)))
    spent.spend(len(grid))
    ranked = sorted(zip(values, grid))

    rng = np.random.default_rng(seed)
    starts = [(pt, v) for v, pt in ranked[: cfg["top_k"]]]
    for pt in rng.random((cfg["restarts"], 2)):
        if spent.exhausted:
            break
        pt = (float(pt[0]), float(pt[1]))
        starts.append((pt, objective(pt)))
        spent.spend()

    best_value, best_point = ranked[0]
    for pt, value in starts:
        if spent.exhausted:
            break
        pt, value = _refine(
            pt,
            value,
            objective,
            cfg["grid_step"] / 2,
            cfg["refine_tol"],
            spent,
        )
        if (value, pt) < (best_value, best_point):
            best_value, best_point = value, pt
    msg.text(
        f"Search at p={p}: {metric} distance {best_value:.6g} "
        f"after {spent.spent} evaluations",
        show=bool(verbose),
    )

    _, w = best_bob(best_point, source, target, metric)
    model = LocalNoiseModel(
        alpha=1.0,
        g=best_point[0],
        h=best_point[1],
        beta=1.0,
        bob_rows=_columns_to_rows(w),
    )
    # distance of the reported model
    reached = distance(
        apply_local_noise(source, model).values, target, metric
    )
    return FeasibilityReport(
        p=p,
        metric=metric,
        distance=reached,
        model=model,
        evaluations=spent.spent,
        budget=limit,
        exhausted=spent.exhausted,
        marginal_floor=marginal_floor(source, target, metric),
    )


def _columns_to_rows(w: np.ndarray) -> np.ndarray:
    rows = np.clip(np.asarray(w).reshape(2, BOB_OUTCOMES), 0, None)
    return rows / rows.sum(axis=1, keepdims=True)
