#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Mapping, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..tensor import OpRecord
from .convnd import convnd_vjp

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

# (time, channel, x, y) <-> (x, y, channel, time)
_TO_TEMPORAL = (2, 3, 1, 0)
_FROM_TEMPORAL = (3, 2, 0, 1)


def conv2dt_vjp(
    x: NDArray, w_spatial: Mapping[str, NDArray], w_temporal: Mapping[str, NDArray]
) -> Tuple[NDArray, OpRecord]:
    r"""2D+t convolution with its differentiation record.

    The pullback returns (g_x, {"spatial": {...}, "temporal": {...}}).

    """

    h, rec_s = convnd_vjp(x, w_spatial["kernel"], w_spatial.get("bias"))
    out, rec_t = convnd_vjp(
        np.transpose(h, _TO_TEMPORAL), w_temporal["kernel"], w_temporal.get("bias")
    )
    out = np.transpose(out, _FROM_TEMPORAL)

    def pullback(g):
        g_h, g_kt, g_bt = rec_t.pullback(np.transpose(g, _TO_TEMPORAL))
        g_x, g_ks, g_bs = rec_s.pullback(np.transpose(g_h, _FROM_TEMPORAL))

        grads = {"spatial": {"kernel": g_ks}, "temporal": {"kernel": g_kt}}

        if g_bs is not None:
            grads["spatial"]["bias"] = g_bs

        if g_bt is not None:
            grads["temporal"]["bias"] = g_bt

        return g_x, grads

    return out, OpRecord("conv2dt", (out.shape,), pullback)


def conv2dt(
    x: NDArray, w_spatial: Mapping[str, NDArray], w_temporal: Mapping[str, NDArray]
) -> NDArray:
    r"""Complex 2D+t convolution: a 2-D spatial convolution followed by a 1-D
    temporal convolution, both zero-padded to keep the extents.

    Parameters
    ----------
    x : numpy.ndarray
        Features (time, in-channels, x, y).
    w_spatial : dict
        Spatial weights, "kernel" (mid-channels, in-channels, kx, ky) and an
        optional "bias".
    w_temporal : dict
        Temporal weights, "kernel" (out-channels, mid-channels, kt) and an
        optional "bias".

    Returns
    -------
    numpy.ndarray
        Features (time, out-channels, x, y).

    Raises
    ------
    ShapeError
        If the channels do not match.

    """

    out, _ = conv2dt_vjp(x, w_spatial, w_temporal)

    return out
