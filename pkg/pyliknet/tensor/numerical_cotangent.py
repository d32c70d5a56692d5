#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Callable

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from .tree import tree_axpy

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _cotangent_loss(fun, x, cotangent):
    out = fun(x)
    return float(np.real(np.vdot(np.ravel(cotangent), np.ravel(out))))


def numerical_cotangent(
    fun: Callable, x: NDArray, cotangent: NDArray, step: float = 1e-6
) -> NDArray:
    r"""Central finite-difference cotangent of the test loss
    L(x) = Re <cotangent, fun(x)> with respect to every element of x.

    Parameters
    ----------
    fun : callable
        Function of x.
    x : numpy.ndarray
        Point of evaluation. Real or complex.
    cotangent : numpy.ndarray
        Direction in the output space.
    step : float, Optional
        Finite-difference step. Default is 1e-6.

    Returns
    -------
    numpy.ndarray
        dL/dRe(x) + i dL/dIm(x) (real array if x is real).

    """

    x = np.array(x, copy=True)
    is_complex = np.iscomplexobj(x)
    out = np.zeros(x.shape, dtype=x.dtype)
    flat = x.reshape(-1)
    grad = out.reshape(-1)

    units = [1.0, 1j] if is_complex else [1.0]

    for i in range(flat.size):
        for unit in units:
            orig = flat[i]
            flat[i] = orig + step * unit
            l_plus = _cotangent_loss(fun, x, cotangent)
            flat[i] = orig - step * unit
            l_minus = _cotangent_loss(fun, x, cotangent)
            flat[i] = orig
            grad[i] += unit * (l_plus - l_minus) / (2 * step)

    return out


def directional_derivative(
    loss: Callable, params, direction, step: float = 1e-6
) -> float:
    r"""Central finite difference of a real scalar loss along a direction.

    Parameters
    ----------
    loss : callable
        Real scalar function of params.
    params : numpy.ndarray or dict or list
        Point of evaluation, an array or a parameter tree.
    direction : numpy.ndarray or dict or list
        Direction of the derivative, same structure as params.
    step : float, Optional
        Finite-difference step. Default is 1e-6.

    Returns
    -------
    float
        (loss(p + h d) - loss(p - h d)) / 2h.

    """

    l_plus = loss(tree_axpy(step, direction, params))
    l_minus = loss(tree_axpy(-step, direction, params))

    return float((l_plus - l_minus) / (2 * step))
