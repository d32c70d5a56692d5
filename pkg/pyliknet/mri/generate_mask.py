#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Optional

# 3rd party imports
import numpy as np
from xarray.core.dataarray import DataArray

# Local imports
from ..errors import ConfigurationError, InfeasibleAccelerationError
from ..tensor import make_rng
from .containers import sampling_mask

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

# Number of calibration lines at the clinical matrix size (176 lines).
_CLINICAL_CENTER_LINES, _CLINICAL_LINES = 24, 176

# Largest relative gap between the achieved and the requested acceleration.
_ACCELERATION_TOLERANCE = 0.15


def default_center_lines(n_lines: int) -> int:
    r"""Center block size scaled from 24 lines at 176 phase encodings."""
    return max(1, int(np.floor(n_lines * _CLINICAL_CENTER_LINES / _CLINICAL_LINES + 0.5)))


def generate_mask(
    n_frames: int,
    n_lines: int,
    acceleration: float,
    center_lines: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> DataArray:
    r"""Generates a variable-density ky-t Cartesian sampling mask.

    Every frame samples round(Y/R) lines (round half up), so the achieved
    acceleration stays within 15% of R. The center block of lines is always
    sampled; the remaining lines are drawn without replacement with probability
    proportional to 1 / (1 + |ky - center - d_t|), where d_t is a per-frame
    offset of the density peak that follows a golden-ratio rotation, so the
    frames are temporally incoherent.

    Parameters
    ----------
    n_frames : int
        Number of frames T.
    n_lines : int
        Number of phase-encoding lines Y.
    acceleration : float
        Target acceleration factor R >= 1.
    center_lines : int, Optional
        Size of the fully sampled center block. Default scales 24 lines at
        176 phase encodings to n_lines.
    rng : numpy.random.Generator, Optional
        Random generator. Default is make_rng(0).

    Returns
    -------
    DataArray
        Binary mask (time, ky) with the achieved acceleration in attrs.

    Raises
    ------
    ConfigurationError
        If R < 1 or the center block does not fit.
    InfeasibleAccelerationError
        If round(Y/R) < 1, if the center block exceeds Y/R lines or if the
        achieved acceleration misses R by more than 15%.

    Examples
    --------
    >>> from pyliknet import mri, tensor
    >>> mask = mri.generate_mask(8, 32, 4, 4, tensor.make_rng(0))
    >>> mask.sum("ky").data
    array([8., 8., 8., 8., 8., 8., 8., 8.])

    """

    if acceleration < 1:
        raise ConfigurationError(f"acceleration must be >= 1, got {acceleration}")

    if n_frames < 1 or n_lines < 1:
        raise ConfigurationError("mask extents must be positive")

    if rng is None:
        rng = make_rng(0)

    if center_lines is None:
        center_lines = default_center_lines(n_lines)

    if not 0 < center_lines <= n_lines:
        raise ConfigurationError(
            f"center block of {center_lines} lines does not fit in {n_lines} lines"
        )

    n_sampled = int(np.floor(n_lines / acceleration + 0.5))

    if n_sampled < 1:
        raise InfeasibleAccelerationError(
            f"acceleration {acceleration} leaves no line out of {n_lines}"
        )

    if center_lines > n_lines / acceleration:
        raise InfeasibleAccelerationError(
            f"center block of {center_lines} lines exceeds the {n_lines / acceleration:.2f} "
            f"lines per frame of acceleration {acceleration}"
        )

    achieved = n_lines / n_sampled

    if abs(achieved - acceleration) > _ACCELERATION_TOLERANCE * acceleration:
        raise InfeasibleAccelerationError(
            f"{n_sampled} of {n_lines} lines per frame give acceleration {achieved:.3f}, "
            f"more than {_ACCELERATION_TOLERANCE:.0%} away from {acceleration}"
        )

    # Center block, same convention as the calibration region of fastMRI
    start = (n_lines - center_lines + 1) // 2
    center = n_lines // 2
    ky = np.arange(n_lines)
    is_center = (ky >= start) & (ky < start + center_lines)
    outer = ky[~is_center]
    n_outer = n_sampled - center_lines

    spacing = n_lines / n_sampled
    golden = (np.sqrt(5.0) - 1.0) / 2.0

    mask = np.zeros((n_frames, n_lines), dtype=np.float64)
    mask[:, is_center] = 1.0

    for i_t in range(n_frames):
        if n_outer == 0:
            continue

        shift = ((i_t * golden) % 1.0 - 0.5) * spacing
        weights = 1.0 / (1.0 + np.abs(outer - center - shift))
        chosen = rng.choice(outer, size=n_outer, replace=False, p=weights / weights.sum())
        mask[i_t, chosen] = 1.0

    attrs = {
        "acceleration": float(acceleration),
        "achieved_acceleration": float(achieved),
        "center_lines": int(center_lines),
    }

    return sampling_mask(mask, attrs=attrs)
