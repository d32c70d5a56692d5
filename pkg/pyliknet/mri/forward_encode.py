#!/usr/bin/env python
# -*- coding: utf-8 -*-

# 3rd party imports
from xarray.core.dataarray import DataArray

# Local imports
from .containers import cine_image, kspace
from .encoding_operator import EncodingOperator

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def forward_encode(x, maps, mask) -> DataArray:
    r"""Simulates undersampled multi-coil k-space y_u = M F (S x).

    Parameters
    ----------
    x : DataArray or array_like
        Cine image (time, x, y).
    maps : DataArray or array_like
        Coil sensitivity maps (coil, x, y).
    mask : DataArray or array_like
        Sampling mask (time, ky).

    Returns
    -------
    DataArray
        Undersampled k-space (time, coil, kx, ky).

    Raises
    ------
    ShapeError
        If the dims are incompatible.

    """

    x = cine_image(x)
    operator = EncodingOperator(maps, mask)

    return kspace(operator.forward(x.data))
