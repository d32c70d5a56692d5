#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Mapping, Optional, Sequence, Tuple

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


def upsample3d_vjp(
    x: NDArray,
    weights: Mapping[str, NDArray],
    out_shape: Optional[Sequence[int]] = None,
    stride: int = 2,
) -> Tuple[NDArray, OpRecord]:
    r"""upsample3d with its differentiation record. The pullback returns
    (g_x, {"kernel": ..., "bias": ...})."""

    x = np.asarray(x)
    kernel, bias = weights["kernel"], weights.get("bias")

    if kernel.shape[1] != x.shape[1]:
        raise ShapeError("channel mismatch", x.shape, kernel.shape)

    n_t, _, n_x, n_y = x.shape
    full_shape = (n_t * stride, kernel.shape[0], n_x * stride, n_y * stride)

    if out_shape is None:
        out_shape = full_shape

    out_shape = (out_shape[0], kernel.shape[0], out_shape[2], out_shape[3])

    if any(o > f for o, f in zip(out_shape, full_shape)):
        raise ShapeError("requested upsampled dims too large", out_shape, full_shape)

    crop = tuple(slice(0, s) for s in out_shape)
    strided = (slice(None, None, stride), slice(None), slice(None, None, stride), slice(None, None, stride))

    mixed = np.moveaxis(np.tensordot(x, kernel, axes=([1], [1])), -1, 1)
    full = np.zeros(full_shape, dtype=np.result_type(x, kernel))
    full[strided] = mixed

    if bias is not None:
        full += np.reshape(bias, (1, -1, 1, 1))

    out = full[crop]

    def pullback(g):
        g_full = np.zeros(full_shape, dtype=np.result_type(g, full))
        g_full[crop] = g
        g_mixed = g_full[strided]

        g_x = np.moveaxis(np.tensordot(g_mixed, np.conj(kernel), axes=([1], [0])), -1, 1)
        grads = {"kernel": np.tensordot(g_mixed, np.conj(x), axes=([0, 2, 3], [0, 2, 3]))}

        if bias is not None:
            grads["bias"] = np.sum(g, axis=(0, 2, 3))

        return g_x, grads

    return out, OpRecord("upsample3d", (out.shape,), pullback)


def upsample3d(
    x: NDArray,
    weights: Mapping[str, NDArray],
    out_shape: Optional[Sequence[int]] = None,
    stride: int = 2,
) -> NDArray:
    r"""3-D transpose convolution with kernel size 1 and stride 2.

    Each input element is mixed over channels and placed at the strided
    output position; the other positions only receive the bias. Every
    pooled axis (time, x, y) doubles.

    Parameters
    ----------
    x : numpy.ndarray
        Features (time, in-channels, x, y).
    weights : dict
        "kernel" (out-channels, in-channels) and optional "bias".
    out_shape : tuple of int, Optional
        Target dims used to crop after replication padding in the pooling.
        Default is the doubled dims.
    stride : int, Optional
        Stride. Default is 2.

    Returns
    -------
    numpy.ndarray
        Features (time, out-channels, x, y).

    """

    out, _ = upsample3d_vjp(x, weights, out_shape, stride)

    return out
