#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Optional

# 3rd party imports
import numpy as np
from xarray.core.dataarray import DataArray

# Local imports
from ..errors import ConfigurationError
from ..tensor import make_rng
from .containers import cine_image

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _ellipse(g_x, g_y, center, axes):
    return ((g_x - center[0]) / axes[0]) ** 2 + ((g_y - center[1]) / axes[1]) ** 2 <= 1


def generate_phantom(
    n_frames: int,
    n_x: int,
    n_y: int,
    rng: Optional[np.random.Generator] = None,
) -> DataArray:
    r"""Generates a dynamic cardiac-like phantom.

    Static background ellipses surround a ventricle: a disk of blood pool
    inside a myocardial annulus whose inner radius follows one sinusoidal
    period over the T frames, so the last frame is continuous with the
    first. Pixels outside the ventricle disk are identical in every frame.
    A smooth static spatial phase is applied and the magnitude is normalized
    to a maximum of 1.

    Parameters
    ----------
    n_frames : int
        Number of frames T >= 2.
    n_x : int
        Number of pixels along x.
    n_y : int
        Number of pixels along y.
    rng : numpy.random.Generator, Optional
        Random generator jittering positions, sizes and intensities.
        Default is make_rng(0).

    Returns
    -------
    DataArray
        Complex cine image (time, x, y). attrs hold the ventricle geometry.

    Raises
    ------
    ConfigurationError
        If n_frames < 2.

    """

    if n_frames < 2:
        raise ConfigurationError(f"phantom needs at least 2 frames, got {n_frames}")

    if rng is None:
        rng = make_rng(0)

    g_x, g_y = np.meshgrid(
        (np.arange(n_x) - n_x / 2 + 0.5) / (n_x / 2),
        (np.arange(n_y) - n_y / 2 + 0.5) / (n_y / 2),
        indexing="ij",
    )

    jitter = rng.uniform(-1.0, 1.0, size=12)

    # Static anatomy
    static = np.zeros((n_x, n_y))
    static[_ellipse(g_x, g_y, (0.0, 0.0), (0.88 + 0.04 * jitter[0], 0.72 + 0.04 * jitter[1]))] = 0.25
    static[_ellipse(g_x, g_y, (-0.45, 0.32), (0.18, 0.26))] = 0.55 + 0.1 * jitter[2]
    static[_ellipse(g_x, g_y, (0.48, -0.36), (0.2, 0.14))] = 0.45 + 0.1 * jitter[3]

    # Ventricle
    center = (0.1 + 0.05 * jitter[4], 0.05 + 0.05 * jitter[5])
    r_out = 0.34 + 0.02 * jitter[6]
    r_mean = 0.2 + 0.01 * jitter[7]
    r_amp = 0.06 + 0.01 * jitter[8]
    blood, myocardium = 1.0, 0.35 + 0.05 * jitter[9]
    offset = np.pi * jitter[10]

    dist = np.hypot(g_x - center[0], g_y - center[1])
    disk = dist < r_out

    frames = np.repeat(static[None, ...], n_frames, axis=0)

    for i_t in range(n_frames):
        r_in = r_mean + r_amp * np.sin(2 * np.pi * i_t / n_frames + offset)
        frames[i_t, disk] = np.where(dist[disk] < r_in, blood, myocardium)

    phase = np.pi / 3 * (0.6 * g_x**2 + 0.4 * g_y + 0.5 * jitter[11])
    out = frames * np.exp(1j * phase)[None, ...]
    out /= np.max(np.abs(out))

    attrs = {"center": list(center), "r_out": r_out, "r_mean": r_mean, "r_amp": r_amp}

    return cine_image(out, attrs=attrs)
