#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Sequence, Tuple

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


def pooled_shape(shape: Sequence[int], size: int = 2, axes=(0, 2, 3)) -> tuple:
    r"""Output dims of maxpool3d for input dims shape."""
    return tuple(
        -(-s // size) if i in axes else s for i, s in enumerate(shape)
    )


def maxpool3d_vjp(
    x: NDArray, size: int = 2, axes: Sequence[int] = (0, 2, 3)
) -> Tuple[NDArray, OpRecord]:
    r"""maxpool3d with its differentiation record. The pullback routes the
    cotangent to the selected element of each cell."""

    x = np.asarray(x)
    axes = tuple(sorted(a % x.ndim for a in axes))

    pads = [(0, (-s) % size if i in axes else 0) for i, s in enumerate(x.shape)]
    x_pad = np.pad(x, pads, mode="edge")

    split_shape, cell_axes = [], []

    for i, s in enumerate(x_pad.shape):
        if i in axes:
            split_shape += [s // size, size]
            cell_axes.append(len(split_shape) - 1)
        else:
            split_shape.append(s)

    cells = np.moveaxis(
        x_pad.reshape(split_shape), cell_axes, range(-len(axes), 0)
    )
    cells_shape = cells.shape
    flat = cells.reshape(*cells_shape[: -len(axes)], -1)

    # np.argmax returns the first maximum, ties go to the lowest flat index
    arg = np.argmax(np.abs(flat), axis=-1)[..., None]
    out = np.take_along_axis(flat, arg, axis=-1)[..., 0]

    def pullback(g):
        g_flat = np.zeros(flat.shape, dtype=np.result_type(g, x))
        np.put_along_axis(g_flat, arg, g[..., None], axis=-1)

        g_pad = np.moveaxis(
            g_flat.reshape(cells_shape), range(-len(axes), 0), cell_axes
        ).reshape(x_pad.shape)

        # fold the replicated edge back onto its source
        for axis in axes:
            n = x.shape[axis]

            if g_pad.shape[axis] > n:
                extra = np.take(g_pad, range(n, g_pad.shape[axis]), axis=axis)
                g_pad = np.take(g_pad, range(n), axis=axis)
                last = [slice(None)] * g_pad.ndim
                last[axis] = slice(n - 1, n)
                g_pad[tuple(last)] += np.sum(extra, axis=axis, keepdims=True)

        return (g_pad,)

    return out, OpRecord("maxpool3d", (out.shape,), pullback)


def maxpool3d(x: NDArray, size: int = 2, axes: Sequence[int] = (0, 2, 3)) -> NDArray:
    r"""Complex 3-D max pooling by magnitude.

    Each size^3 cell returns its element of largest magnitude with the complex
    value intact; ties go to the lowest flat index of the cell. Odd extents
    are padded to even by replication.

    Parameters
    ----------
    x : numpy.ndarray
        Features (time, channel, x, y).
    size : int, Optional
        Pooling size. Default is 2.
    axes : tuple of int, Optional
        Pooled axes. Default is (time, x, y) = (0, 2, 3).

    Returns
    -------
    numpy.ndarray
        Pooled features.

    """

    out, _ = maxpool3d_vjp(x, size, axes)

    return out
