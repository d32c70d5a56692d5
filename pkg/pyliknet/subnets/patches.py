#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import List, Sequence, Tuple

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


def _axis_windows(n: int, count: int) -> List[slice]:
    if count == 1:
        return [slice(0, n)]

    base = -(-n // count)
    size = min(base + base // 4, n)

    return [
        slice(start, start + size)
        for start in ((i * (n - size)) // (count - 1) for i in range(count))
    ]


def patch_windows(dims: Sequence[int], spec: Sequence[int]) -> List[Tuple[slice, ...]]:
    r"""Index windows of the spatial-temporal patches of a cine image.

    Temporal groups do not overlap. Spatial patches have extent
    ceil(n / count) + overlap, with overlap floor(extent / 4) clipped at the
    image size, and are spread with a uniform stride so that every pixel is
    covered.

    Parameters
    ----------
    dims : tuple of int
        Image dims (time, x, y).
    spec : tuple of int
        Patch counts (n_t, n_x, n_y).

    Returns
    -------
    list of tuple of slice
        Windows in (group, ix, iy) order.

    Raises
    ------
    ConfigurationError
        If n_t does not divide the frame count or a count is out of range.

    """

    n_t, n_x, n_y = (int(s) for s in spec)
    n_frames, size_x, size_y = dims

    if min(n_t, n_x, n_y) < 1:
        raise ConfigurationError(f"patch counts must be >= 1, got {tuple(spec)}")

    if n_frames % n_t:
        raise ConfigurationError(
            f"{n_t} temporal groups do not divide {n_frames} frames"
        )

    if n_x > size_x or n_y > size_y:
        raise ConfigurationError(
            f"patch spec {tuple(spec)} too fine for {size_x}x{size_y} frames"
        )

    group = n_frames // n_t
    t_windows = [slice(i * group, (i + 1) * group) for i in range(n_t)]

    return [
        (t_w, x_w, y_w)
        for t_w in t_windows
        for x_w in _axis_windows(size_x, n_x)
        for y_w in _axis_windows(size_y, n_y)
    ]


def coverage(dims: Sequence[int], spec: Sequence[int]) -> NDArray:
    r"""Number of patches covering each pixel."""
    counts = np.zeros(tuple(dims))

    for window in patch_windows(dims, spec):
        counts[window] += 1

    return counts


def patch_split(x: NDArray, spec: Sequence[int]) -> List[NDArray]:
    r"""Splits a cine image into overlapping spatial-temporal patches.

    Parameters
    ----------
    x : numpy.ndarray
        Cine image (time, x, y).
    spec : tuple of int
        Patch counts (n_t, n_x, n_y).

    Returns
    -------
    list of numpy.ndarray
        Patch copies in (group, ix, iy) order.

    See Also
    --------
    pyliknet.subnets.patch_merge

    """

    x = np.asarray(x)

    return [x[window].copy() for window in patch_windows(x.shape, spec)]


def patch_merge(
    patches: Sequence[NDArray], spec: Sequence[int], dims: Sequence[int]
) -> NDArray:
    r"""Merges patches back to a cine image, averaging overlapping pixels
    with uniform weights.

    Parameters
    ----------
    patches : list of numpy.ndarray
        Patches in the order returned by patch_split.
    spec : tuple of int
        Patch counts (n_t, n_x, n_y).
    dims : tuple of int
        Image dims (time, x, y).

    Returns
    -------
    numpy.ndarray
        Cine image.

    Raises
    ------
    ShapeError
        If the number or the dims of the patches do not match the spec.

    """

    windows = patch_windows(dims, spec)

    if len(patches) != len(windows):
        raise ShapeError(f"expected {len(windows)} patches, got {len(patches)}")

    out = np.zeros(tuple(dims), dtype=np.result_type(*patches))

    for patch, window in zip(patches, windows):
        if patch.shape != out[window].shape:
            raise ShapeError("patch dims mismatch", patch.shape, out[window].shape)

        out[window] += patch

    return out / coverage(dims, spec)
