class ScaleError(ValueError):
    """An exact kernel was asked for an input beyond its supported size."""
