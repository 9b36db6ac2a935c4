import pstats
from cProfile import Profile

import memory_profiler as mp

from ..classical import search_feasibility
from ..protocol import linear_grid, parse_channel
from ..protocol import sweep as run_sweep


def profile_sweep(channel: str = "ad", steps: int = 21, memory: bool = None):
    kind = parse_channel(channel)
    grid = linear_grid(0.0, 1.0, steps)

    def func():
        run_sweep(kind, grid, jobs=1)

    _profile(func, memory)


def profile_search(p: float = 0.5, top_k: int = 4, memory: bool = None):
    def func():
        search_feasibility(p, top_k=top_k)

    _profile(func, memory)


def _profile(fn, memory=None):
    if memory:
        _mem_profile(fn)
    else:
        _time_profile(fn)


def _mem_profile(fn):
    prof = mp.LineProfiler(backend="psutil")
    prof(fn)()
    mp.show_results(prof)


def _time_profile(fn):
    profiler = Profile()
    profiler.runcall(fn)
    stats = pstats.Stats(profiler)
    stats.sort_stats("time")
    stats.print_stats(40)
