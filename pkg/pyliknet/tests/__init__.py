#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Optional

# 3rd party imports
import numpy as np
from numpy.typing import NDArray
from xarray.core.dataarray import DataArray

# Local imports
from .. import mri
from ..tensor import make_rng

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


__all__ = [
    "crandn",
    "direct_dft2",
    "generate_cine",
    "generate_kspace",
    "generate_maps",
    "generate_mask_array",
    "random_direction",
]


def crandn(*shape: int, seed: int = 0) -> NDArray[np.complex128]:
    r"""Generate complex normal data for testings

    Parameters
    ----------
    *shape : int
        Dims of the data.
    seed : int, Optional
        Seed of the generator.

    Returns
    -------
    numpy.ndarray
        Complex data with unit variance real and imaginary parts.

    """
    rng = make_rng(seed)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_direction(a: NDArray, seed: int = 1) -> NDArray:
    r"""Random cotangent or direction with the dims and kind of a."""
    if np.iscomplexobj(a):
        return crandn(*np.shape(a), seed=seed)

    return make_rng(seed).standard_normal(np.shape(a))


def generate_cine(
    n_t: int = 4, n_x: int = 8, n_y: int = 8, seed: int = 0, as_xarray: bool = False
):
    r"""Generate a random cine image (time, x, y) for testings

    Parameters
    ----------
    n_t, n_x, n_y : int
        Dims of the image.
    seed : int
        Seed of the generator.
    as_xarray : bool
        Wrap the data into a CineImage DataArray.

    Returns
    -------
    numpy.ndarray or DataArray
        Synthetic image.

    """
    data = crandn(n_t, n_x, n_y, seed=seed)

    if as_xarray:
        return mri.cine_image(data)

    return data


def generate_kspace(
    n_t: int = 4, n_c: int = 2, n_x: int = 8, n_y: int = 8, seed: int = 0
) -> NDArray[np.complex128]:
    r"""Generate random k-space (time, coil, kx, ky) for testings"""
    return crandn(n_t, n_c, n_x, n_y, seed=seed)


def generate_maps(n_c: int = 2, n_x: int = 8, n_y: int = 8, random: bool = False):
    r"""Generate coil maps (coil, x, y) for testings

    Parameters
    ----------
    n_c, n_x, n_y : int
        Dims of the maps.
    random : bool
        Random maps normalized to unit sum of squares instead of the smooth
        synthetic profiles.

    Returns
    -------
    numpy.ndarray
        Coil maps.

    """
    if not random:
        return mri.generate_coil_maps(n_c, n_x, n_y).data

    maps = crandn(n_c, n_x, n_y, seed=7)
    return maps / np.sqrt(np.sum(np.abs(maps) ** 2, axis=0))


def generate_mask_array(
    n_t: int = 4,
    n_y: int = 8,
    acceleration: float = 2.0,
    center_lines: Optional[int] = 2,
    seed: int = 0,
) -> NDArray[np.float64]:
    r"""Generate a sampling mask (time, ky) for testings"""
    mask = mri.generate_mask(n_t, n_y, acceleration, center_lines, make_rng(seed))

    if isinstance(mask, DataArray):
        return mask.data

    return mask


def direct_dft2(image: NDArray) -> NDArray:
    r"""Centered unitary 2-D DFT of the last two axes computed as a direct
    double sum, quadratic in the number of pixels."""
    n_x, n_y = image.shape[-2:]
    k_x = np.arange(n_x) - n_x // 2
    k_y = np.arange(n_y) - n_y // 2
    out = np.zeros(image.shape, dtype=np.complex128)

    for i, u in enumerate(k_x):
        for j, v in enumerate(k_y):
            phase = np.exp(
                -2j * np.pi * (np.outer(k_x * u / n_x, np.ones(n_y)) + k_y[None] * v / n_y)
            )
            out[..., i, j] = np.sum(image * phase, axis=(-2, -1))

    return out / np.sqrt(n_x * n_y)
