#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Dict, Mapping, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray
from scipy.special import expit

# Local imports
from ..errors import ShapeError
from ..tensor import OpRecord

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _softplus(x):
    return float(np.logaddexp(0.0, x))


def _inverse_softplus(y):
    return float(y + np.log(-np.expm1(-y)))


def init_kspace_dc(mu: float = 1.0) -> Dict[str, NDArray]:
    r"""k-space data-consistency parameters. mu is stored through the inverse
    softplus so that the effective weight is mu."""
    return {"mu": np.array(_inverse_softplus(mu))}


def _broadcast_mask(mask, shape):
    mask = np.asarray(mask)

    if mask.shape != (shape[0], shape[-1]):
        raise ShapeError("mask does not match the k-space", mask.shape, shape)

    return mask[:, None, None, :] > 0


def kspace_dc_vjp(
    r: NDArray, y_u: NDArray, mask: NDArray, params: Mapping[str, NDArray]
) -> Tuple[NDArray, OpRecord]:
    r"""kspace_dc with its differentiation record. The pullback returns
    (g_r, g_y_u, {"mu": ...})."""

    if np.shape(r) != np.shape(y_u):
        raise ShapeError("k-space dims differ", np.shape(r), np.shape(y_u))

    raw = float(params["mu"])
    mu = _softplus(raw)
    sampled = _broadcast_mask(mask, np.shape(r))

    out = np.where(sampled, (y_u + mu * r) / (1.0 + mu), r)

    def pullback(g):
        g_r = np.where(sampled, g * mu / (1.0 + mu), g)
        g_y = np.where(sampled, g / (1.0 + mu), 0.0)
        d_mu = np.sum(np.real(np.conj(g) * (r - y_u))[np.broadcast_to(sampled, g.shape)])
        g_mu = float(d_mu) / (1.0 + mu) ** 2 * float(expit(raw))

        return g_r, g_y, {"mu": np.array(g_mu)}

    return out, OpRecord("kspace_dc", (out.shape,), pullback)


def kspace_dc(
    r: NDArray, y_u: NDArray, mask: NDArray, params: Mapping[str, NDArray]
) -> NDArray:
    r"""k-space data-consistency layer, closed-form minimizer of the weighted
    fidelity. Sampled points become (y_u + mu r) / (1 + mu); unsampled points
    keep r.

    Parameters
    ----------
    r : numpy.ndarray
        k-space network output (time, coil, kx, ky).
    y_u : numpy.ndarray
        Undersampled k-space.
    mask : numpy.ndarray
        Sampling mask (time, ky).
    params : dict
        {"mu": pre-softplus weight}.

    Returns
    -------
    numpy.ndarray
        Data-consistent k-space.

    Examples
    --------
    >>> import numpy as np
    >>> from pyliknet import consistency
    >>> r = np.full((1, 1, 1, 1), 4 + 0j)
    >>> y_u = np.full((1, 1, 1, 1), 2 + 0j)
    >>> consistency.kspace_dc(r, y_u, np.ones((1, 1)), consistency.init_kspace_dc())
    array([[[[3.+0.j]]]])

    """

    out, _ = kspace_dc_vjp(r, y_u, mask, params)

    return out
