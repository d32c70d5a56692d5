#!/usr/bin/env python
# -*- coding: utf-8 -*-

# 3rd party imports
import numpy as np

# Local imports
from ..errors import UndefinedMetricError
from .magnitudes import magnitudes

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def nrmse(pred, ref) -> float:
    r"""Normalized root mean squared error of magnitude images,
    || |pred| - |ref| ||_2 / || |ref| ||_2.

    Parameters
    ----------
    pred : array_like
        Prediction.
    ref : array_like
        Reference, same dims.

    Returns
    -------
    float
        NRMSE.

    Raises
    ------
    UndefinedMetricError
        If the reference is all zero.

    """

    pred, ref = magnitudes(pred, ref)
    norm = np.linalg.norm(ref)

    if norm == 0:
        raise UndefinedMetricError("NRMSE is undefined for an all-zero reference")

    return float(np.linalg.norm(pred - ref) / norm)
