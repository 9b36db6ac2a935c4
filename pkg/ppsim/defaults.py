import os

from .errors import Errors, ParameterError

config = {
    # numeric tolerances
    "state_atol": 1e-12,
    "psd_atol": 1e-10,
    "prob_atol": 1e-10,
    "probe_atol": 1e-10,
    "holevo_atol": 1e-9,
    # sweeps
    "steps": 101,
    # classical feasibility search
    "metric": "tv",
    "grid_step": 0.1,
    "top_k": 32,
    "refine_tol": 1e-4,
    "budget": 50000,
    "restarts": 4,
    "seed": 0,
    "zero_tol": 1e-8,
}

JOBS_ENV = "PPSIM_JOBS"


def get_jobs(jobs: int = None) -> int:
    """
    Resolve the number of worker processes.

    An explicit value wins, then the `PPSIM_JOBS` environment
    variable, then the number of available CPUs.
    """
    if jobs is None:
        value = os.environ.get(JOBS_ENV)
        if value is None:
            return os.cpu_count() or 1
        try:
            jobs = int(value)
        except ValueError:
            raise ParameterError(Errors.E030.format(value=value))
    if jobs < 1:
        raise ParameterError(Errors.E030.format(value=jobs))
    return jobs
