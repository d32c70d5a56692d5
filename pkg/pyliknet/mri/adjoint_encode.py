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


def adjoint_encode(y, maps, mask) -> DataArray:
    r"""Applies the adjoint encoding A^H y = sum_c conj(S_c) F^-1(M y_c).

    Parameters
    ----------
    y : DataArray or array_like
        K-space (time, coil, kx, ky).
    maps : DataArray or array_like
        Coil sensitivity maps (coil, x, y).
    mask : DataArray or array_like
        Sampling mask (time, ky).

    Returns
    -------
    DataArray
        Coil-combined image (time, x, y).

    """

    y = kspace(y)
    operator = EncodingOperator(maps, mask)

    return cine_image(operator.adjoint(y.data))
