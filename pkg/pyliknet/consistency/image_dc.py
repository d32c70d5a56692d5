#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Dict, Mapping, Tuple

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


def init_image_dc(eta: float = 1.0, alpha: float = 0.5) -> Dict[str, NDArray]:
    r"""Image data-consistency parameters. alpha is stored unconstrained and
    clamped to [0, 1] when applied."""
    return {"eta": np.array(float(eta)), "alpha": np.array(float(alpha))}


def image_dc_vjp(
    p: NDArray, q: NDArray, y_u: NDArray, op, params: Mapping[str, NDArray]
) -> Tuple[NDArray, OpRecord]:
    r"""image_dc with its differentiation record. The pullback returns
    (g_p, g_q, g_y_u, {"eta": ..., "alpha": ...})."""

    if np.shape(p) != np.shape(q):
        raise ShapeError("image branch outputs differ", np.shape(p), np.shape(q))

    eta = float(params["eta"])
    alpha_raw = float(params["alpha"])
    alpha = min(max(alpha_raw, 0.0), 1.0)

    x_init = alpha * p + (1.0 - alpha) * q
    step = op.adjoint(op.forward(x_init) - y_u)
    out = x_init - eta * step

    def pullback(g):
        g_init = g - eta * op.normal(g)
        g_eta = -float(np.real(np.vdot(step, g)))

        if 0.0 < alpha_raw < 1.0:
            g_alpha = float(np.real(np.vdot(p - q, g_init)))
        else:
            g_alpha = 0.0

        grads = {"eta": np.array(g_eta), "alpha": np.array(g_alpha)}

        return alpha * g_init, (1.0 - alpha) * g_init, eta * op.forward(g), grads

    return out, OpRecord("image_dc", (out.shape,), pullback)


def image_dc(
    p: NDArray, q: NDArray, y_u: NDArray, op, params: Mapping[str, NDArray]
) -> NDArray:
    r"""Image data-consistency layer: one gradient step on the data fidelity
    started from the convex combination of both image branches.

    .. math::

        x_{init} = \alpha p + (1 - \alpha) q, \quad
        x = x_{init} - \eta A^H (A x_{init} - y_u)

    Parameters
    ----------
    p : numpy.ndarray
        UNet output (time, x, y).
    q : numpy.ndarray
        Low-rank output (time, x, y).
    y_u : numpy.ndarray
        Undersampled k-space (time, coil, kx, ky).
    op : EncodingOperator
        Encoding operator of the sample.
    params : dict
        {"eta": step size, "alpha": mixing weight, clamped to [0, 1]}.

    Returns
    -------
    numpy.ndarray
        Data-consistent cine image.

    Raises
    ------
    ShapeError
        If the dims are inconsistent.

    """

    out, _ = image_dc_vjp(p, q, y_u, op, params)

    return out
