#!/usr/bin/env python
# -*- coding: utf-8 -*-

# 3rd party imports
import numpy as np
import xarray as xr
from numpy.typing import NDArray

# Local imports
from ..errors import ShapeError
from ..tensor import fft2c, ifft2c

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


class EncodingOperator:
    r"""SENSE encoding operator A = M F S for Cartesian line sampling.

    Images have axes (time, x, y), k-space (time, coil, kx, ky), the mask
    (time, ky) and the coil maps (coil, x, y). F is the centered unitary
    2-D Fourier transform over the last two axes.

    Parameters
    ----------
    maps : array_like
        Coil sensitivity maps.
    mask : array_like
        Binary sampling mask, broadcast along coil and kx.

    """

    def __init__(self, maps, mask):
        self.maps = np.asarray(maps.data if isinstance(maps, xr.DataArray) else maps)
        self.mask = np.asarray(mask.data if isinstance(mask, xr.DataArray) else mask)

        if self.maps.ndim != 3:
            raise ShapeError("coil maps must have axes (coil, x, y)", self.maps.shape)

        if self.mask.ndim != 2 or self.mask.shape[1] != self.maps.shape[2]:
            raise ShapeError(
                "mask must have axes (time, ky) matching the maps",
                self.mask.shape,
                self.maps.shape,
            )

    @property
    def image_shape(self):
        return (self.mask.shape[0], *self.maps.shape[1:])

    @property
    def kspace_shape(self):
        return (self.mask.shape[0], *self.maps.shape)

    def _check(self, t, shape, name):
        if np.shape(t) != shape:
            raise ShapeError(f"{name} dims incompatible with the operator", np.shape(t), shape)

    def _broadcast_mask(self):
        return self.mask[:, None, None, :]

    def coil_expand(self, x: NDArray) -> NDArray:
        r"""Fully sampled encoding F S x."""
        self._check(x, self.image_shape, "image")
        return fft2c(self.maps[None, ...] * x[:, None, ...])

    def coil_combine(self, y: NDArray) -> NDArray:
        r"""Adjoint of the fully sampled encoding, (F S)^H y."""
        self._check(y, self.kspace_shape, "k-space")
        return np.sum(np.conj(self.maps)[None, ...] * ifft2c(y), axis=1)

    def forward(self, x: NDArray) -> NDArray:
        r"""Applies A x = M F S x. Unsampled lines are exactly zero."""
        return self._broadcast_mask() * self.coil_expand(x)

    def adjoint(self, y: NDArray) -> NDArray:
        r"""Applies A^H y = sum_c conj(S_c) F^-1 (M y_c)."""
        self._check(y, self.kspace_shape, "k-space")
        return self.coil_combine(self._broadcast_mask() * y)

    def normal(self, x: NDArray) -> NDArray:
        r"""Applies A^H A x."""
        return self.adjoint(self.forward(x))
