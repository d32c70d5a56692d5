#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from dataclasses import dataclass
from typing import Callable, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..errors import ConfigurationError, ShapeError

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


@dataclass(frozen=True)
class LossReport:
    r"""Mean absolute errors of the image and k-space outputs."""

    l_image: float
    l_kspace: float

    @property
    def total(self) -> float:
        return self.l_image + self.l_kspace


def _abs_error_vjp(pred, ref, norm):
    pred, ref = np.asarray(pred), np.asarray(ref)

    if pred.shape != ref.shape:
        raise ShapeError("prediction and reference dims differ", pred.shape, ref.shape)

    diff = pred - ref
    mag = np.abs(diff)
    value = float(np.sum(mag)) / norm

    def pullback():
        # subgradient 0 where the error vanishes
        return np.divide(diff, mag, out=np.zeros_like(diff), where=mag > 0) / norm

    return value, pullback


def loss_vjp(
    x_hat: NDArray,
    y_hat: NDArray,
    ref_x: NDArray,
    ref_y: NDArray,
    normalization: str = "element",
) -> Tuple[LossReport, Callable]:
    r"""loss with its pullback. The pullback takes no argument and returns
    the cotangents (g_x_hat, g_y_hat) of the total loss."""

    if normalization == "element":
        norm_x, norm_y = np.size(ref_x), np.size(ref_y)
    elif normalization == "image":
        norm_x = norm_y = np.size(ref_x)
    else:
        raise ConfigurationError(f"unknown loss normalization {normalization}")

    l_image, pb_x = _abs_error_vjp(x_hat, ref_x, norm_x)
    l_kspace, pb_y = _abs_error_vjp(y_hat, ref_y, norm_y)

    def pullback():
        return pb_x(), pb_y()

    return LossReport(l_image, l_kspace), pullback


def loss(
    x_hat: NDArray,
    y_hat: NDArray,
    ref_x: NDArray,
    ref_y: NDArray,
    normalization: str = "element",
) -> LossReport:
    r"""Mean absolute error of the image and of the k-space outputs.

    .. math::

        L_I = \frac{1}{P} \sum |\hat{x} - x|, \quad
        L_K = \frac{1}{Q} \sum |\hat{y} - y|

    Parameters
    ----------
    x_hat : numpy.ndarray
        Reconstructed image.
    y_hat : numpy.ndarray
        Reconstructed k-space.
    ref_x : numpy.ndarray
        Reference image.
    ref_y : numpy.ndarray
        Fully sampled k-space.
    normalization : {"element", "image"}, Optional
        "element" divides each term by its own element count, "image"
        divides both by the image element count. Default is "element".

    Returns
    -------
    LossReport
        Both terms; total = l_image + l_kspace.

    Raises
    ------
    ShapeError
        If a prediction and its reference differ in dims.

    """

    report, _ = loss_vjp(x_hat, y_hat, ref_x, ref_y, normalization)

    return report
