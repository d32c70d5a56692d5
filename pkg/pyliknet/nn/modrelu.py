#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Optional, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..tensor import OpRecord

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _broadcast(bias, ndim, axis):
    shape = [1] * ndim
    shape[axis] = -1
    return np.reshape(bias, shape)


def modrelu_vjp(
    z: NDArray, bias: Optional[NDArray] = None, axis: int = 1
) -> Tuple[NDArray, OpRecord]:
    r"""ModReLU with its differentiation record. The pullback returns
    (g_z, g_bias); g_bias is None when bias is None."""

    z = np.asarray(z)
    axis = axis % z.ndim
    b = np.zeros(z.shape[axis]) if bias is None else np.asarray(bias, dtype=np.float64)
    b = _broadcast(b, z.ndim, axis)

    mag = np.abs(z)
    active = (mag + b > 0) & (mag > 0)
    inv = np.divide(1.0, mag, out=np.zeros(mag.shape), where=active)
    scale = np.where(active, (mag + b) * inv, 0.0)
    out = scale * z

    def pullback(g):
        proj = np.real(np.conj(g) * z)
        g_z = np.where(active, g * scale - (b * inv**3 * proj) * z, 0.0)
        g_b = None

        if bias is not None:
            other = tuple(a for a in range(z.ndim) if a != axis)
            g_b = np.sum(np.where(active, proj * inv, 0.0), axis=other)

        return g_z.astype(z.dtype, copy=False), g_b

    return out, OpRecord("modrelu", (out.shape,), pullback)


def modrelu(z: NDArray, bias: Optional[NDArray] = None, axis: int = 1) -> NDArray:
    r"""Complex ModReLU activation f(z) = relu(|z| + b) z / |z|, f(0) = 0.

    The phase is preserved where the unit is active. The subgradient at
    |z| + b = 0 is 0.

    Parameters
    ----------
    z : numpy.ndarray
        Complex input.
    bias : numpy.ndarray, Optional
        Real bias per channel. Default is zero.
    axis : int, Optional
        Channel axis. Default is 1.

    Returns
    -------
    numpy.ndarray
        Activated input.

    Examples
    --------
    >>> import numpy as np
    >>> from pyliknet import nn
    >>> nn.modrelu(np.array([[3 + 4j]]), np.array([5.0]))
    array([[6.+8.j]])

    """

    out, _ = modrelu_vjp(z, bias, axis)

    return out
