#!/usr/bin/env python
# -*- coding: utf-8 -*-

# 3rd party imports
import matplotlib as mpl
import matplotlib.pyplot as plt
import numpy as np
import xarray as xr

# Local imports
from ..io.pgm import ERROR_SCALE, error_map

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _frame(image, frame, name):
    if isinstance(image, xr.DataArray):
        image = image.data

    if not isinstance(image, np.ndarray):
        raise TypeError(f"{name} must be a numpy.ndarray or a xarray.DataArray")

    if image.ndim == 3:
        image = image[frame]
    elif image.ndim != 2:
        raise ValueError(f"{name} must be (time, x, y) or (x, y)")

    return np.abs(image)


def plot_reconstruction(
    axs,
    pred,
    ref,
    frame: int = 0,
    zero_filled=None,
    cmap: str = "gray",
    scale: float = ERROR_SCALE,
):
    r"""Plots a reconstructed frame next to the zero-filled input and the
    scaled absolute error map.

    Parameters
    ----------
    axs : list of matplotlib.axes.Axes
        Target axes, one per panel. If None create a new figure.
    pred : xarray.DataArray or numpy.ndarray
        Reconstructed image (time, x, y).
    ref : xarray.DataArray or numpy.ndarray
        Reference image (time, x, y).
    frame : int, Optional
        Index of the frame to plot. Default is 0.
    zero_filled : xarray.DataArray or numpy.ndarray, Optional
        Zero-filled image. The panel is skipped if None.
    cmap : str, Optional
        Colormap of the magnitude panels. Default is "gray".
    scale : float, Optional
        Scaling of the absolute error map. Default is 5.

    Returns
    -------
    axs : list of matplotlib.axes.Axes
        Axes with magnitude, (zero-filled) and error map panels.

    """

    panels = [("Reconstruction", _frame(pred, frame, "pred"))]

    if zero_filled is not None:
        panels.append(("Zero-filled", _frame(zero_filled, frame, "zero_filled")))

    ref_frame = _frame(ref, frame, "ref")
    err = error_map(panels[0][1], ref_frame, scale)

    if axs is None:
        _, axs = plt.subplots(1, len(panels) + 1, figsize=(3 * len(panels) + 3, 3))
    elif len(axs) != len(panels) + 1:
        raise ValueError(f"axs must hold {len(panels) + 1} axes")

    vmax = max(ref_frame.max(), 1e-12)

    for axis, (title, image) in zip(axs, panels):
        axis.imshow(image.T, cmap=mpl.colormaps.get_cmap(cmap), vmin=0, vmax=vmax)
        axis.set_title(title)

    axs[-1].imshow(err.T, cmap=mpl.colormaps.get_cmap(cmap), vmin=0, vmax=1)
    axs[-1].set_title(f"Error (x{scale:g})")

    for axis in axs:
        axis.set_xticks([])
        axis.set_yticks([])

    return axs
