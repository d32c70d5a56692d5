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

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _check(x, kernel, bias):
    n_sp = kernel.ndim - 2

    if n_sp < 1 or x.ndim < n_sp + 1:
        raise ShapeError("convolution input has too few axes", x.shape, kernel.shape)

    if x.shape[-n_sp - 1] != kernel.shape[1]:
        raise ShapeError("channel mismatch", x.shape, kernel.shape)

    if any(k % 2 == 0 for k in kernel.shape[2:]):
        raise ShapeError("kernel extents must be odd", kernel.shape)

    if bias is not None and np.shape(bias) != (kernel.shape[0],):
        raise ShapeError("bias must have one value per output channel", np.shape(bias))

    return n_sp


def convnd_vjp(
    x: NDArray, kernel: NDArray, bias: Optional[NDArray] = None
) -> Tuple[NDArray, OpRecord]:
    r"""Complex "same" convolution with its differentiation record.

    See Also
    --------
    pyliknet.nn.convnd

    """

    x, kernel = np.asarray(x), np.asarray(kernel)
    n_sp = _check(x, kernel, bias)
    n_batch = x.ndim - n_sp - 1
    k_size = kernel.shape[2:]
    spatial = x.shape[-n_sp:]
    dtype = np.result_type(x, kernel, np.complex64)

    pads = [(0, 0)] * (n_batch + 1) + [(k // 2, k // 2) for k in k_size]
    x_pad = np.moveaxis(np.pad(x, pads), n_batch, -1)

    def window(offsets):
        taps = tuple(slice(o, o + s) for o, s in zip(offsets, spatial))
        return (slice(None),) * n_batch + taps + (slice(None),)

    out = np.zeros((*x.shape[:n_batch], *spatial, kernel.shape[0]), dtype=dtype)

    for offsets in np.ndindex(*k_size):
        out += x_pad[window(offsets)] @ kernel[(..., *offsets)].T

    if bias is not None:
        out += bias

    out = np.moveaxis(out, -1, n_batch)

    def pullback(g):
        g = np.moveaxis(g, n_batch, -1)
        g_pad = np.zeros(x_pad.shape, dtype=dtype)
        g_kernel = np.zeros(kernel.shape, dtype=dtype)
        sum_axes = tuple(range(g.ndim - 1))

        for offsets in np.ndindex(*k_size):
            tap = kernel[(..., *offsets)]
            g_pad[window(offsets)] += g @ np.conj(tap)
            g_kernel[(..., *offsets)] = np.tensordot(
                g, np.conj(x_pad[window(offsets)]), axes=(sum_axes, sum_axes)
            )

        crop = tuple(slice(k // 2, k // 2 + s) for k, s in zip(k_size, spatial))
        g_x = np.moveaxis(g_pad[(slice(None),) * n_batch + crop], -1, n_batch)
        g_bias = None if bias is None else np.sum(g, axis=sum_axes)

        return g_x, g_kernel, g_bias

    return out, OpRecord("convnd", (out.shape,), pullback)


def convnd(x: NDArray, kernel: NDArray, bias: Optional[NDArray] = None) -> NDArray:
    r"""Complex-valued "same" convolution over the trailing axes.

    Cross-correlation with full complex multiply-accumulate and symmetric
    zero padding, as in deep-learning frameworks.

    Parameters
    ----------
    x : numpy.ndarray
        Input with layout (\*batch, in-channels, \*spatial).
    kernel : numpy.ndarray
        Kernel (out-channels, in-channels, \*k) with odd extents k.
    bias : numpy.ndarray, Optional
        Complex bias per output channel.

    Returns
    -------
    numpy.ndarray
        Output with layout (\*batch, out-channels, \*spatial).

    Raises
    ------
    ShapeError
        If the channels do not match or a kernel extent is even.

    """

    out, _ = convnd_vjp(x, kernel, bias)

    return out
