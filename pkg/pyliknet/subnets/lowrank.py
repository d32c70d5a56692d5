#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Dict, Mapping, Sequence, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..errors import ShapeError
from ..tensor import OpRecord
from .patches import coverage, patch_windows
from .svt import svt_patch_vjp

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

TAU_INIT = -2.0


def init_lowrank(spec: Sequence[int], tau: float = TAU_INIT) -> Dict[str, NDArray]:
    r"""Low-rank layer parameters: one threshold coefficient per patch.

    Parameters
    ----------
    spec : tuple of int
        Patch counts (n_t, n_x, n_y).
    tau : float, Optional
        Initial coefficient. Default is -2.

    Returns
    -------
    dict
        {"tau": numpy.ndarray of n_t n_x n_y values}.

    """

    return {"tau": np.full(int(np.prod(spec)), float(tau))}


def lowrank_forward_vjp(
    x: NDArray, params: Mapping[str, NDArray], spec: Sequence[int], mode: str = "exact"
) -> Tuple[NDArray, OpRecord]:
    r"""lowrank_forward with its differentiation record. The pullback returns
    (g_x, {"tau": ...})."""

    x = np.asarray(x)
    windows = patch_windows(x.shape, spec)
    tau = np.asarray(params["tau"], dtype=np.float64)

    if tau.shape != (len(windows),):
        raise ShapeError("one tau per patch expected", tau.shape, (len(windows),))

    counts = coverage(x.shape, spec)
    out = np.zeros(x.shape, dtype=x.dtype)
    records = []

    for i, window in enumerate(windows):
        patch, record = svt_patch_vjp(x[window], tau[i], index=i, mode=mode)
        out[window] += patch
        records.append(record)

    out /= counts

    def pullback(g):
        g_avg = g / counts
        g_x = np.zeros(x.shape, dtype=np.result_type(g, x))
        g_tau = np.zeros(tau.shape)

        for i, (window, record) in enumerate(zip(windows, records)):
            g_patch, g_tau[i] = record.pullback(g_avg[window])
            g_x[window] += g_patch

        return g_x, {"tau": g_tau}

    return out, OpRecord("lowrank", (out.shape,), pullback)


def lowrank_forward(
    x: NDArray, params: Mapping[str, NDArray], spec: Sequence[int]
) -> NDArray:
    r"""Patch-wise low-rank layer: split the cine image into overlapping
    spatial-temporal patches, threshold the singular values of each patch
    with its own tau and merge.

    Parameters
    ----------
    x : numpy.ndarray
        Cine image (time, x, y).
    params : dict
        {"tau": one coefficient per patch}.
    spec : tuple of int
        Patch counts (n_t, n_x, n_y). (1, 1, 1) is the global low-rank mode.

    Returns
    -------
    numpy.ndarray
        Low-rank cine image.

    Raises
    ------
    ConfigurationError
        If the spec is invalid for the dims of x.
    NumericError
        If an SVD does not converge.

    """

    out, _ = lowrank_forward_vjp(x, params, spec)

    return out
