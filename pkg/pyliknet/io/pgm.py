#!/usr/bin/env python
# -*- coding: utf-8 -*-

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..errors import ShapeError

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

ERROR_SCALE = 5.0


def quantize(image: NDArray) -> NDArray:
    r"""Maps values in [0, 1] to 8-bit gray levels, rounding half up.

    Examples
    --------
    >>> quantize(np.array([0.0, 0.5, 1.0]))
    array([  0, 128, 255], dtype=uint8)

    """

    image = np.asarray(image, dtype=np.float64)

    return np.clip(np.floor(image * 255.0 + 0.5), 0, 255).astype(np.uint8)


def error_map(pred: NDArray, ref: NDArray, scale: float = ERROR_SCALE) -> NDArray:
    r"""Absolute error of the magnitudes scaled and clipped to [0, 1]."""
    diff = np.abs(np.abs(np.asarray(pred)) - np.abs(np.asarray(ref)))

    return np.clip(scale * diff, 0.0, 1.0)


def encode_pgm(image: NDArray) -> bytes:
    r"""Binary 8-bit portable graymap of a 2-D image with values in [0, 1]."""

    image = np.asarray(image)

    if image.ndim != 2:
        raise ShapeError("graymap image must be 2-D", image.shape)

    height, width = image.shape
    header = f"P5\n{width} {height}\n255\n".encode("ascii")

    return header + quantize(image).tobytes()


def write_pgm(path: str, image: NDArray):
    r"""Writes a 2-D image with values in [0, 1] as binary 8-bit PGM.

    Parameters
    ----------
    path : str
        Output file.
    image : numpy.ndarray
        Image (rows, columns). Values outside [0, 1] are clipped.

    """

    with open(path, "wb") as file:
        file.write(encode_pgm(image))
