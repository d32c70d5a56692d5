#!/usr/bin/env python
# -*- coding: utf-8 -*-

# 3rd party imports
import numpy as np
import xarray as xr
from numpy.typing import NDArray

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def casorati(x: NDArray) -> NDArray:
    r"""Reshapes a (time, x, y) block into its Casorati matrix, rows are the
    spatial pixels and columns the frames."""
    x = np.asarray(x.data if isinstance(x, xr.DataArray) else x)
    return np.reshape(np.moveaxis(x, 0, -1), (-1, x.shape[0]))


def inverse_casorati(matrix: NDArray, shape) -> NDArray:
    r"""Reshapes a Casorati matrix back to a (time, x, y) block."""
    n_t, n_x, n_y = shape
    return np.moveaxis(np.reshape(matrix, (n_x, n_y, n_t)), -1, 0)
