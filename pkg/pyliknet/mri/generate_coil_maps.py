#!/usr/bin/env python
# -*- coding: utf-8 -*-

# 3rd party imports
import numpy as np
from xarray.core.dataarray import DataArray

# Local imports
from ..errors import ConfigurationError
from .containers import coil_maps

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _grid(n_pts):
    return (np.arange(n_pts) - n_pts / 2 + 0.5) / (n_pts / 2)


def generate_coil_maps(
    n_coils: int,
    n_x: int,
    n_y: int,
    width: float = 0.6,
    distance: float = 1.2,
    phase_slope: float = np.pi / 4,
) -> DataArray:
    r"""Generates smooth synthetic coil sensitivity maps.

    Coil c is a Gaussian lobe centered at angle 2 pi c / C + pi / 4 around the
    field of view, modulated by a linear phase ramp along the same direction.
    The maps are normalized so that sum_c |S_c|^2 = 1 at every pixel.

    Parameters
    ----------
    n_coils : int
        Number of coils C.
    n_x : int
        Number of pixels along x.
    n_y : int
        Number of pixels along y.
    width : float, Optional
        Lobe width in units of the half field of view. Default is 0.6.
    distance : float, Optional
        Distance of the lobe centers from the center of the field of view in
        units of the half field of view. Default is 1.2.
    phase_slope : float, Optional
        Phase ramp in radians per half field of view. Default is pi / 4.

    Returns
    -------
    DataArray
        Coil maps (coil, x, y).

    Raises
    ------
    ConfigurationError
        If n_coils < 1.

    """

    if n_coils < 1:
        raise ConfigurationError(f"number of coils must be >= 1, got {n_coils}")

    g_x, g_y = np.meshgrid(_grid(n_x), _grid(n_y), indexing="ij")

    maps = np.empty((n_coils, n_x, n_y), dtype=np.complex128)

    for i_c in range(n_coils):
        theta = 2 * np.pi * i_c / n_coils + np.pi / 4
        direction = np.array([np.cos(theta), np.sin(theta)])
        c_x, c_y = distance * direction

        lobe = np.exp(-((g_x - c_x) ** 2 + (g_y - c_y) ** 2) / (2 * width**2))
        ramp = phase_slope * (direction[0] * g_x + direction[1] * g_y)
        maps[i_c] = lobe * np.exp(1j * ramp)

    maps /= np.sqrt(np.sum(np.abs(maps) ** 2, axis=0))

    return coil_maps(maps, attrs={"width": width, "distance": distance})
