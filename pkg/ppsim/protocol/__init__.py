from .metrics import ProtocolMetrics, holevo_bound, metrics, qber
from .pipeline import (
    AMPLITUDE_DAMPING_SUPPORT,
    POLARIZATION_SUPPORT,
    ChannelKind,
    JointDistribution,
    NoiseOrdering,
    ProtocolConfig,
    bob_eve_states,
    final_states,
    initial_state,
    parse_channel,
    run_pipeline,
)
from .sweep import evaluate, linear_grid, sweep
