#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Sequence

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..errors import ShapeError

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def complex_tensor(
    values: Sequence[complex], dims: Sequence[int], dtype: str = "complex128"
) -> NDArray[np.complex128]:
    r"""Builds a dense complex tensor from a flat row-major value sequence.

    Parameters
    ----------
    values : array_like
        Flat sequence of complex scalars in row-major order.
    dims : list of int
        Positive extents of the tensor.
    dtype : {"complex128", "complex64"}, Optional
        Precision of the tensor. Default is double precision.

    Returns
    -------
    numpy.ndarray
        Tensor of shape ``dims``.

    Raises
    ------
    ShapeError
        If an extent is not positive or the number of values does not match
        the product of the extents.
    ValueError
        If a value is not finite.

    """

    dims = tuple(int(d) for d in dims)

    if any(d < 1 for d in dims):
        raise ShapeError("extents must be positive", dims)

    values = np.asarray(values, dtype=dtype).ravel()

    if values.size != int(np.prod(dims)):
        raise ShapeError(
            "number of values does not match the extents", (values.size,), dims
        )

    if not np.all(np.isfinite(values)):
        raise ValueError("tensor values must be finite")

    return values.reshape(dims)
