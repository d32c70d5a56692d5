#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Optional, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..errors import ShapeError
from ..tensor import OpRecord
from .convnd import convnd_vjp

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def conv3d_vjp(
    x: NDArray, kernel: NDArray, bias: Optional[NDArray] = None
) -> Tuple[NDArray, OpRecord]:
    r"""conv3d with its differentiation record. The pullback returns
    (g_x, g_kernel, g_bias)."""

    if np.ndim(x) != 5 or np.ndim(kernel) != 5:
        raise ShapeError(
            "conv3d expects (time, channel, coil, x, y) features and a 3-D kernel",
            np.shape(x),
            np.shape(kernel),
        )

    return convnd_vjp(x, kernel, bias)


def conv3d(x: NDArray, kernel: NDArray, bias: Optional[NDArray] = None) -> NDArray:
    r"""Complex 3-D "same" convolution over the (coil, x, y) axes, time being
    a batch axis.

    Parameters
    ----------
    x : numpy.ndarray
        Features (time, in-channels, coil, x, y).
    kernel : numpy.ndarray
        Kernel (out-channels, in-channels, kc, kx, ky).
    bias : numpy.ndarray, Optional
        Complex bias per output channel.

    Returns
    -------
    numpy.ndarray
        Features (time, out-channels, coil, x, y).

    """

    out, _ = conv3d_vjp(x, kernel, bias)

    return out
