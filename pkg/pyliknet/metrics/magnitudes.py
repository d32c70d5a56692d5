#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Tuple

# 3rd party imports
import numpy as np
import xarray as xr
from numpy.typing import NDArray

# Local imports
from ..errors import ShapeError

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def magnitudes(pred, ref) -> Tuple[NDArray, NDArray]:
    r"""Magnitude images of a prediction and its reference.

    Raises
    ------
    ShapeError
        If the dims differ.

    """

    pred = np.abs(pred.data if isinstance(pred, xr.DataArray) else np.asarray(pred))
    ref = np.abs(ref.data if isinstance(ref, xr.DataArray) else np.asarray(ref))

    if pred.shape != ref.shape:
        raise ShapeError("prediction and reference dims differ", pred.shape, ref.shape)

    return pred.astype(np.float64), ref.astype(np.float64)
