import os

DEFAULT_GROUP_CAP = 10_000
DEFAULT_ISOMETRY_CAP = 1_000_000


def group_cap():
    """Largest discriminant group order that exhaustive searches will touch.

    ``LATKIT_CAP`` in the environment overrides the default.
    """
    raw = os.environ.get("LATKIT_CAP")
    if raw is None:
        return DEFAULT_GROUP_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"LATKIT_CAP must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"LATKIT_CAP must be a positive integer, got {raw!r}")
    return value
