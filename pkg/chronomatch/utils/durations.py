import math

from .types import Duration

UNITS: dict[str, int] = {
    "s": 1,
    "m": 60,
    "h": 3600,
    "d": 86400,
    "w": 7 * 86400,
}
INFINITY = ("inf", "infinity", "∞")


def parse_duration(value: str | int | float) -> Duration:
    """Parse a window duration into a number of seconds

    Accepted forms are integers (seconds), integers with one of the suffixes
    ``s``, ``m``, ``h``, ``d``, ``w`` (``1h``, ``2d``) and ``inf``.

    :param value: the value to parse
    """
    if isinstance(value, bool):
        raise ValueError(f"Invalid duration {value!r}")
    if isinstance(value, int):
        if value < 0:
            raise ValueError(f"Duration must be non-negative, got {value}")
        return value
    if isinstance(value, float):
        if value == math.inf:
            return math.inf
        if not value.is_integer() or value < 0:
            raise ValueError(f"Invalid duration {value!r}")
        return int(value)
    text = value.strip().lower()
    if text in INFINITY:
        return math.inf
    multiplier = 1
    if text and text[-1] in UNITS:
        multiplier = UNITS[text[-1]]
        text = text[:-1]
    try:
        amount = int(text)
    except ValueError:
        raise ValueError(f"Invalid duration {value!r}") from None
    if amount < 0:
        raise ValueError(f"Duration must be non-negative, got {value!r}")
    return amount * multiplier


def format_duration(value: Duration) -> str:
    """Render a duration in the most compact suffixed form"""
    if value == math.inf:
        return "inf"
    seconds = int(value)
    for suffix in ("w", "d", "h", "m"):
        unit = UNITS[suffix]
        if seconds and seconds % unit == 0:
            return f"{seconds // unit}{suffix}"
    return str(seconds)
