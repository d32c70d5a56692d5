#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Tuple

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


def dense_vjp(x: NDArray, weight: NDArray, bias: NDArray) -> Tuple[NDArray, OpRecord]:
    r"""Real dense layer w x + b with its differentiation record. The pullback
    returns (g_x, g_weight, g_bias)."""

    if weight.shape[1] != np.shape(x)[0] or np.shape(bias) != (weight.shape[0],):
        raise ShapeError("dense layer dims mismatch", np.shape(x), weight.shape)

    out = weight @ x + bias

    def pullback(g):
        return weight.T @ g, np.outer(g, x), g

    return out, OpRecord("dense", (out.shape,), pullback)


def dense(x: NDArray, weight: NDArray, bias: NDArray) -> NDArray:
    r"""Real-valued fully connected layer.

    Parameters
    ----------
    x : numpy.ndarray
        Input vector (in,).
    weight : numpy.ndarray
        Weights (out, in).
    bias : numpy.ndarray
        Bias (out,).

    Returns
    -------
    numpy.ndarray
        Output vector (out,).

    """

    out, _ = dense_vjp(x, weight, bias)

    return out
