import numpy as np

from ..errors import Errors, ParameterError

METRICS = ("tv", "l2")


def _pair(left, right):
    left, right = np.asarray(left, dtype=float), np.asarray(right, dtype=float)
    if left.shape != right.shape:
        raise ParameterError(
            Errors.E054.format(left=left.shape, right=right.shape)
        )
    return left, right


def total_variation(left, right) -> float:
    left, right = _pair(left, right)
    return float(np.abs(left - right).sum() / 2)


def l2_distance(left, right) -> float:
    left, right = _pair(left, right)
    return float(np.linalg.norm((left - right).ravel()))


def check_metric(metric: str) -> str:
    if metric not in METRICS:
        raise ParameterError(
            Errors.E051.format(metric=metric, metrics=METRICS)
        )
    return metric


def distance(left, right, metric: str = "tv") -> float:
    if check_metric(metric) == "tv":
        return total_variation(left, right)
    return l2_distance(left, right)
