#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Dict, Mapping, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray
from scipy.special import expit, logit

# Local imports
from ..tensor import OpRecord

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def init_isl(a: float = 0.5, b: float = 0.5) -> Dict[str, NDArray]:
    r"""Information sharing parameters, stored through the logit so that the
    effective weights are a and b."""
    return {"a": np.array(float(logit(a))), "b": np.array(float(logit(b)))}


def isl_vjp(
    x: NDArray, y: NDArray, op, params: Mapping[str, NDArray]
) -> Tuple[Tuple[NDArray, NDArray], OpRecord]:
    r"""isl with its differentiation record. The pullback takes (g_x', g_y')
    and returns (g_x, g_y, {"a": ..., "b": ...})."""

    raw_a, raw_b = float(params["a"]), float(params["b"])
    a, b = float(expit(raw_a)), float(expit(raw_b))

    fs_x = op.coil_expand(x)
    y_new = a * fs_x + (1.0 - a) * y
    fsh_y = op.coil_combine(y_new)
    x_new = b * fsh_y + (1.0 - b) * x

    def pullback(g_x, g_y):
        g_y_tot = g_y + b * op.coil_expand(g_x)
        g_xin = (1.0 - b) * g_x + a * op.coil_combine(g_y_tot)
        g_yin = (1.0 - a) * g_y_tot

        g_b = float(np.real(np.vdot(fsh_y - x, g_x))) * b * (1.0 - b)
        g_a = float(np.real(np.vdot(fs_x - y, g_y_tot))) * a * (1.0 - a)

        return g_xin, g_yin, {"a": np.array(g_a), "b": np.array(g_b)}

    record = OpRecord("isl", (x_new.shape, y_new.shape), pullback)

    return (x_new, y_new), record


def isl(
    x: NDArray, y: NDArray, op, params: Mapping[str, NDArray]
) -> Tuple[NDArray, NDArray]:
    r"""Information sharing layer between the image and the k-space branch.

    The k-space is updated first, then the image from the updated k-space:

    .. math::

        y' = a F S x + (1 - a) y, \quad x' = b (F S)^H y' + (1 - b) x

    with a, b in (0, 1) through a sigmoid.

    Parameters
    ----------
    x : numpy.ndarray
        Cine image (time, x, y).
    y : numpy.ndarray
        Multi-coil k-space (time, coil, kx, ky).
    op : EncodingOperator
        Operator providing the fully sampled encoding F S and its adjoint.
        Coil maps must be normalized.
    params : dict
        {"a": pre-sigmoid weight, "b": pre-sigmoid weight}.

    Returns
    -------
    x_new : numpy.ndarray
        Updated cine image.
    y_new : numpy.ndarray
        Updated k-space.

    """

    out, _ = isl_vjp(x, y, op, params)

    return out
