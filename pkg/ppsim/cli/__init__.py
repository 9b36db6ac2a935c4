from .classical import classical_sim
from .point import point
from .profile import profile_search, profile_sweep
from .selftest import selftest
from .sweep import sweep
