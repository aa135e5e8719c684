from typing import Any, Union

import numpy as np
import numpy.typing as npt

IntArray = npt.NDArray[np.int64]
Duration = Union[int, float]
"""An integer number of time units or ``math.inf``"""


def as_int_array(values: Any) -> IntArray:
    """Convert an input into a 64-bit integer array"""
    return np.asarray(values, dtype=np.int64)
