"""
Number rendering shared by the CLI and the result files.
"""
import math
from typing import Iterable, List


def fixed(value: float, decimals: int) -> str:
    """Fixed-point rendering, never ``-0``."""
    text = f"{value:.{decimals}f}"
    return text[1:] if text.startswith("-") and float(text) == 0 else text


def significant(value: float, digits: int) -> str:
    """Rendering with ``digits`` significant digits, never ``-0``."""
    if value == 0 or math.isnan(value):
        return "0" if value == 0 else "nan"
    return f"{value:.{digits}g}"


def distance_value(value: float, digits: int = 6) -> str:
    """
    Distance with ``digits`` significant digits, trailing zeros kept.

    An exact zero prints as ``0.`` followed by ``digits`` zeros.
    """
    if value == 0:
        return "0." + "0" * digits
    if math.isnan(value):
        return "nan"
    return f"{value:#.{digits}g}"


def spectrum_values(values: Iterable[float], digits: int = 12) -> List[str]:
    """
    Render eigenvalues with ``digits`` significant digits relative to the spectrum scale.

    Values below ``scale * 10**-digits`` in magnitude print as ``0``.
    """
    values = [float(v) for v in values]
    scale = max((abs(v) for v in values), default=0.0)
    floor = scale * 10.0 ** (-digits)
    return [significant(0.0 if abs(v) <= floor else v, digits) for v in values]
