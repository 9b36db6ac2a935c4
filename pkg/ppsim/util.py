import srsly


def json_dumps(data, indent=0, sort_keys=False):
    return srsly.json_dumps(data, indent, sort_keys)


def to_builtin(value):
    """
    Convert numpy scalars and arrays, nested in lists, tuples and
    dicts, to plain Python values.
    """
    if isinstance(value, dict):
        return {str(k): to_builtin(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_builtin(v) for v in value]
    if hasattr(value, "tolist"):
        return to_builtin(value.tolist())
    return value
