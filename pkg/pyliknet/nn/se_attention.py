#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Mapping, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray
from scipy.special import expit

# Local imports
from ..errors import ShapeError
from ..tensor import OpRecord
from .dense import dense_vjp

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def se_attention_vjp(
    x: NDArray, weights: Mapping[str, NDArray], axis: int = 0
) -> Tuple[NDArray, OpRecord]:
    r"""se_attention with its differentiation record. The pullback returns
    (g_x, {"w1": ..., "b1": ..., "w2": ..., "b2": ...})."""

    x = np.asarray(x)

    if not -x.ndim <= axis < x.ndim:
        raise ShapeError(f"attended axis {axis} does not exist", x.shape)

    axis = axis % x.ndim
    n_slots = x.shape[axis]

    if weights["w2"].shape[0] != 2 * n_slots:
        raise ShapeError(
            "attention width must be twice the attended axis", weights["w2"].shape, x.shape
        )

    # squeeze: global max over every axis but the attended one
    stacked = np.concatenate([x.real, x.imag], axis=axis)
    rows = np.moveaxis(stacked, axis, 0)
    rows_shape = rows.shape
    rows = rows.reshape(2 * n_slots, -1)
    arg = np.argmax(rows, axis=1)
    squeezed = rows[np.arange(2 * n_slots), arg]

    # excite
    z_1, rec_1 = dense_vjp(squeezed, weights["w1"], weights["b1"])
    hidden = np.maximum(z_1, 0.0)
    z_2, rec_2 = dense_vjp(hidden, weights["w2"], weights["b2"])
    att = expit(z_2)

    shape = [1] * x.ndim
    shape[axis] = n_slots
    a_re = att[:n_slots].reshape(shape)
    a_im = att[n_slots:].reshape(shape)

    out = a_re * x.real + 1j * (a_im * x.imag)
    other = tuple(a for a in range(x.ndim) if a != axis)

    def pullback(g):
        g_re, g_im = np.real(g), np.imag(g)
        g_x = a_re * g_re + 1j * (a_im * g_im)

        g_att = np.concatenate(
            [np.sum(g_re * x.real, axis=other), np.sum(g_im * x.imag, axis=other)]
        )
        g_z2 = g_att * att * (1.0 - att)
        g_hidden, g_w2, g_b2 = rec_2.pullback(g_z2)
        g_z1 = g_hidden * (z_1 > 0)
        g_squeezed, g_w1, g_b1 = rec_1.pullback(g_z1)

        g_rows = np.zeros(rows.shape)
        g_rows[np.arange(2 * n_slots), arg] = g_squeezed
        g_stacked = np.moveaxis(g_rows.reshape(rows_shape), 0, axis)
        g_real, g_imag = np.split(g_stacked, 2, axis=axis)
        g_x = g_x + g_real + 1j * g_imag

        grads = {"w1": g_w1, "b1": g_b1, "w2": g_w2, "b2": g_b2}

        return g_x.astype(x.dtype, copy=False), grads

    return out.astype(x.dtype, copy=False), OpRecord("se_attention", (out.shape,), pullback)


def se_attention(x: NDArray, weights: Mapping[str, NDArray], axis: int = 0) -> NDArray:
    r"""Squeeze-and-excitation attention over one axis of complex features.

    The real and imaginary parts are concatenated along the attended axis
    (2L slots), squeezed by a global max over every other axis, passed
    through two real dense layers (ReLU, sigmoid) and the resulting weights
    in (0, 1) scale the real part (first L slots) and the imaginary part
    (last L slots) of the original features independently.

    Parameters
    ----------
    x : numpy.ndarray
        Complex features.
    weights : dict
        "w1" (hidden, 2L), "b1" (hidden,), "w2" (2L, hidden), "b2" (2L,).
    axis : int, Optional
        Attended axis (time for the image network, coil for the k-space
        network). Default is 0.

    Returns
    -------
    numpy.ndarray
        Re-weighted features with the dims of x.

    Raises
    ------
    ShapeError
        If the attended axis does not exist or the weights do not match it.

    """

    out, _ = se_attention_vjp(x, weights, axis)

    return out
