from .info import ProbabilityTable, mutual_information
from .layout import (
    LABELS,
    PROTOCOL_LAYOUT,
    VACUUM,
    DensityOperator,
    Operator,
    StateVector,
    SubsystemLayout,
)
from .ops import (
    hermitian_spectrum,
    lift,
    partial_trace,
    shannon_entropy,
    tensor,
    trace_distance,
    von_neumann_entropy,
)
