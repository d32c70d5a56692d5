#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Sequence, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray
from scipy import fft as sp_fft

# Local imports
from ..errors import ShapeError
from .op_record import OpRecord

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _check_axes(t, axes):
    if len(axes) != 2:
        raise ShapeError("fft2c needs exactly two axes", tuple(axes))

    ndim = np.ndim(t)

    for axis in axes:
        if not -ndim <= axis < ndim:
            raise ShapeError(f"axis {axis} out of range", np.shape(t))

    axes = tuple(axis % ndim for axis in axes)

    if axes[0] == axes[1]:
        raise ShapeError("fft2c axes must differ", axes)

    return axes


def fft2c(t: NDArray, axes: Sequence[int] = (-2, -1)) -> NDArray:
    r"""Centered unitary 2-D discrete Fourier transform.

    The zero frequency is moved to the corner, the transform is applied with
    1/sqrt(X Y) scaling and the zero frequency is moved back to the center.
    The inverse transform ifft2c is its exact adjoint.

    Parameters
    ----------
    t : numpy.ndarray
        Input tensor.
    axes : tuple of int, Optional
        Pair of axes to transform. Default is the last two.

    Returns
    -------
    numpy.ndarray
        Centered spectrum.

    Raises
    ------
    ShapeError
        If an axis is out of range.

    """

    axes = _check_axes(t, axes)
    out = sp_fft.ifftshift(t, axes=axes)
    out = sp_fft.fft2(out, axes=axes, norm="ortho")
    out = sp_fft.fftshift(out, axes=axes)

    return out


def ifft2c(t: NDArray, axes: Sequence[int] = (-2, -1)) -> NDArray:
    r"""Centered unitary 2-D inverse discrete Fourier transform.

    Parameters
    ----------
    t : numpy.ndarray
        Centered spectrum.
    axes : tuple of int, Optional
        Pair of axes to transform. Default is the last two.

    Returns
    -------
    numpy.ndarray
        Spatial tensor.

    """

    axes = _check_axes(t, axes)
    out = sp_fft.ifftshift(t, axes=axes)
    out = sp_fft.ifft2(out, axes=axes, norm="ortho")
    out = sp_fft.fftshift(out, axes=axes)

    return out


def fft2c_vjp(t: NDArray, axes: Sequence[int] = (-2, -1)) -> Tuple[NDArray, OpRecord]:
    r"""fft2c with its differentiation record. The pullback is ifft2c."""
    out = fft2c(t, axes)

    def pullback(g):
        return (ifft2c(g, axes),)

    return out, OpRecord("fft2c", (out.shape,), pullback)


def ifft2c_vjp(
    t: NDArray, axes: Sequence[int] = (-2, -1)
) -> Tuple[NDArray, OpRecord]:
    r"""ifft2c with its differentiation record. The pullback is fft2c."""
    out = ifft2c(t, axes)

    def pullback(g):
        return (fft2c(g, axes),)

    return out, OpRecord("ifft2c", (out.shape,), pullback)
