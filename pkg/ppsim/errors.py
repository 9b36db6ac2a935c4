class Errors:
    # qlin
    E001 = "Unknown subsystem label '{label}', expected one of {labels}."
    E002 = "Subsystem '{label}' has dimension {dim}, expected 2 or 3."
    E003 = "Subsystem labels must be unique, got {labels}."
    E004 = "Label collision between layouts {left} and {right}."
    E005 = "Expected {expected} entries for layout {layout}, got {found}."
    E006 = "State is not normalized: squared norm {norm}."
    E007 = "Operator is not Hermitian: deviation {dev}."
    E008 = "Density operator has trace {trace}, expected 1."
    E009 = "Negative eigenvalue {value} beyond tolerance."
    E010 = "Probability table entries sum to {total}, expected 1."
    E011 = "Probability table has negative entry {value}."
    E012 = "Probability table shape {shape} does not match axes {axes}."
    E013 = "Unknown axis '{axis}', available: {axes}."
    E014 = "Cannot tensor {left} with {right}."
    # channels
    E020 = "Noise parameter p={p} outside [0, 1]."
    E021 = "Channel acts on dimension {ch_dim}, target '{target}' has {dim}."
    E022 = "Decay factor and time must be nonnegative, got tau={tau}, t={t}."
    E023 = "Channel '{name}' violates completeness: deviation {dev}."
    # config
    E030 = "Invalid number of jobs '{value}', expected a positive integer."
    E031 = "Unknown channel kind '{kind}', expected one of {kinds}."
    E032 = "Unknown noise ordering '{ordering}', expected one of {orderings}."
    E033 = "Invalid grid: steps={steps}, range [{start}, {end}]."
    # attack / protocol
    E040 = "Probe x left |2>: deviation {dev}."
    E041 = "Residual or vacuum outcome has probability {value}."
    E042 = "Support leakage {value} outside the requested basis states."
    E043 = "Holevo bound {holevo} below I_AB {i_ab}."
    E044 = "Holevo bound needs equal dimensions, got {left} and {right}."
    E045 = "Encoding bit must be 0 or 1, got {bit}."
    # classical
    E050 = "'{name}' is not a probability vector: {values}."
    E051 = "Unknown distance metric '{metric}', expected one of {metrics}."
    E052 = "Feasibility search needs p in [0, 1], got {p}."
    E053 = "Search budget must be positive, got {budget}."
    E054 = "Tables must have equal shapes, got {left} and {right}."


class InvariantError(ValueError):
    pass


class LayoutError(ValueError):
    pass


class ParameterError(ValueError):
    pass
