#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Optional

# 3rd party imports
import numpy as np
import xarray as xr
from xarray.core.dataarray import DataArray
from xarray.core.dataset import Dataset

# Local imports
from ..errors import ShapeError

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = ["cine_image", "kspace", "sampling_mask", "coil_maps", "cine_sample"]

CINE_DIMS = ("time", "x", "y")
KSPACE_DIMS = ("time", "coil", "kx", "ky")
MASK_DIMS = ("time", "ky")
MAPS_DIMS = ("coil", "x", "y")


def _to_data_array(data, dims, name, attrs):
    data = data.data if isinstance(data, xr.DataArray) else np.asarray(data)

    if data.ndim != len(dims):
        raise ShapeError(f"{name} must have axes {dims}", data.shape)

    if any(s < 1 for s in data.shape):
        raise ShapeError(f"{name} extents must be positive", data.shape)

    coords = [np.arange(s) for s in data.shape]

    return xr.DataArray(data, coords=coords, dims=dims, attrs=attrs or {}, name=name)


def cine_image(data, attrs: Optional[dict] = None) -> DataArray:
    r"""Creates a coil-combined dynamic image with axes (time, x, y).

    Parameters
    ----------
    data : array_like
        Complex image data.
    attrs : dict, Optional
        Attributes of the image.

    Returns
    -------
    DataArray
        Cine image.

    """

    return _to_data_array(data, CINE_DIMS, "cine", attrs)


def kspace(data, attrs: Optional[dict] = None) -> DataArray:
    r"""Creates coil-resolved k-space with axes (time, coil, kx, ky)."""
    return _to_data_array(data, KSPACE_DIMS, "kspace", attrs)


def sampling_mask(data, attrs: Optional[dict] = None) -> DataArray:
    r"""Creates a Cartesian line sampling mask with axes (time, ky).

    Parameters
    ----------
    data : array_like
        Binary indicators.
    attrs : dict, Optional
        Attributes of the mask.

    Returns
    -------
    DataArray
        Sampling mask.

    Raises
    ------
    ValueError
        If the mask is not binary.

    """

    out = _to_data_array(np.asarray(data, dtype=np.float64), MASK_DIMS, "mask", attrs)

    if not np.all((out.data == 0) | (out.data == 1)):
        raise ValueError("sampling mask must be binary")

    return out


def coil_maps(data, attrs: Optional[dict] = None) -> DataArray:
    r"""Creates coil sensitivity maps with axes (coil, x, y)."""
    return _to_data_array(data, MAPS_DIMS, "maps", attrs)


def cine_sample(
    reference,
    full_kspace,
    under_kspace,
    mask,
    maps,
    acceleration: float,
) -> Dataset:
    r"""Bundles one training/evaluation example.

    Parameters
    ----------
    reference : array_like
        Fully sampled image (time, x, y).
    full_kspace : array_like
        Fully sampled k-space (time, coil, kx, ky).
    under_kspace : array_like
        Undersampled k-space (time, coil, kx, ky).
    mask : array_like
        Sampling mask (time, ky).
    maps : array_like
        Coil sensitivity maps (coil, x, y).
    acceleration : float
        Target acceleration factor of the mask.

    Returns
    -------
    Dataset
        Sample with variables reference, full_kspace, under_kspace, mask and
        maps, and the acceleration in attrs.

    Raises
    ------
    ShapeError
        If the dims of the constituents are inconsistent.

    """

    reference = cine_image(reference)
    full_kspace = kspace(full_kspace)
    under_kspace = kspace(under_kspace)
    mask = sampling_mask(mask)
    maps = coil_maps(maps)

    n_t, n_x, n_y = reference.shape
    expected = (n_t, maps.shape[0], n_x, n_y)

    for k_data in (full_kspace, under_kspace):
        if k_data.shape != expected:
            raise ShapeError("k-space does not match image and maps", k_data.shape, expected)

    if mask.shape != (n_t, n_y):
        raise ShapeError("mask does not match image", mask.shape, (n_t, n_y))

    if maps.shape[1:] != (n_x, n_y):
        raise ShapeError("maps do not match image", maps.shape, (n_x, n_y))

    out = xr.Dataset(
        {
            "reference": reference,
            "full_kspace": full_kspace,
            "under_kspace": under_kspace,
            "mask": mask,
            "maps": maps,
        },
        attrs={"acceleration": float(acceleration)},
    )

    return out
