#!/usr/bin/env python
# -*- coding: utf-8 -*-

# 3rd party imports
import numpy as np

# Local imports
from .magnitudes import magnitudes

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

PSNR_CAP = 300.0


def psnr(pred, ref) -> float:
    r"""Peak signal-to-noise ratio of magnitude images in dB, with the peak
    max|ref|. Capped at 300 dB when the MSE is below 1e-30.

    Parameters
    ----------
    pred : array_like
        Prediction.
    ref : array_like
        Reference, same dims.

    Returns
    -------
    float
        PSNR in dB.

    """

    pred, ref = magnitudes(pred, ref)
    mse = float(np.mean((pred - ref) ** 2))

    if mse < 1e-30:
        return PSNR_CAP

    peak = float(np.max(ref))

    return float(min(10.0 * np.log10(peak**2 / mse), PSNR_CAP)) if peak > 0 else -np.inf
