#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Optional

# 3rd party imports
import numba
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..errors import ConfigurationError, UndefinedMetricError
from .magnitudes import magnitudes

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

WINDOW = 7
K1, K2 = 0.01, 0.03


@numba.jit(cache=True, nogil=True, parallel=True, nopython=True)
def _ssim_frames(pred, ref, win, c_1, c_2):
    n_t, n_x, n_y = pred.shape
    o_x, o_y = n_x - win + 1, n_y - win + 1
    n = win * win
    out = np.zeros(n_t)

    for i_t in numba.prange(n_t):
        total = 0.0

        for i in range(o_x):
            for j in range(o_y):
                mu_a, mu_b = 0.0, 0.0

                for u in range(win):
                    for v in range(win):
                        mu_a += pred[i_t, i + u, j + v]
                        mu_b += ref[i_t, i + u, j + v]

                mu_a /= n
                mu_b /= n
                var_a, var_b, cov = 0.0, 0.0, 0.0

                for u in range(win):
                    for v in range(win):
                        d_a = pred[i_t, i + u, j + v] - mu_a
                        d_b = ref[i_t, i + u, j + v] - mu_b
                        var_a += d_a * d_a
                        var_b += d_b * d_b
                        cov += d_a * d_b

                var_a /= n - 1
                var_b /= n - 1
                cov /= n - 1

                num = (2.0 * mu_a * mu_b + c_1) * (2.0 * cov + c_2)
                den = (mu_a**2 + mu_b**2 + c_1) * (var_a + var_b + c_2)
                total += num / den

        out[i_t] = total / (o_x * o_y)

    return out


def ssim_frames(pred, ref, data_range: Optional[float] = None) -> NDArray:
    r"""Per-frame SSIM of magnitude cine images.

    Parameters
    ----------
    pred : array_like
        Prediction (time, x, y).
    ref : array_like
        Reference, same dims.
    data_range : float, Optional
        Dynamic range. Default is max|ref|.

    Returns
    -------
    numpy.ndarray
        SSIM of each frame.

    """

    pred, ref = magnitudes(pred, ref)

    if pred.ndim == 2:
        pred, ref = pred[None], ref[None]

    if min(pred.shape[-2:]) < WINDOW:
        raise ConfigurationError(
            f"frames of {pred.shape[-2:]} pixels are smaller than the "
            f"{WINDOW}x{WINDOW} SSIM window"
        )

    if data_range is None:
        data_range = float(np.max(ref))

    if data_range <= 0:
        raise UndefinedMetricError("SSIM is undefined for a zero dynamic range")

    c_1 = (K1 * data_range) ** 2
    c_2 = (K2 * data_range) ** 2

    return _ssim_frames(
        np.ascontiguousarray(pred), np.ascontiguousarray(ref), WINDOW, c_1, c_2
    )


def ssim(pred, ref, data_range: Optional[float] = None) -> float:
    r"""Single-scale structural similarity of magnitude images, computed per
    frame with a 7x7 uniform window (valid positions only, sample
    covariances), K1 = 0.01, K2 = 0.03, and averaged over frames.

    Parameters
    ----------
    pred : array_like
        Prediction (time, x, y) or a single frame (x, y).
    ref : array_like
        Reference, same dims.
    data_range : float, Optional
        Dynamic range. Default is max|ref|.

    Returns
    -------
    float
        Mean SSIM.

    Raises
    ------
    ConfigurationError
        If a frame is smaller than the window.
    UndefinedMetricError
        If the dynamic range is zero.

    """

    return float(np.mean(ssim_frames(pred, ref, data_range)))
