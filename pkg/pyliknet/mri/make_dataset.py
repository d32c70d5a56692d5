#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import List, Optional, Sequence

# 3rd party imports
import numpy as np
import tqdm
from xarray.core.dataset import Dataset

# Local imports
from ..errors import ConfigurationError
from ..tensor import make_rng
from .containers import cine_sample
from .encoding_operator import EncodingOperator
from .generate_coil_maps import generate_coil_maps
from .generate_mask import generate_mask
from .generate_phantom import generate_phantom

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def make_sample(
    reference, maps, acceleration: float, center_lines: Optional[int], rng
) -> Dataset:
    r"""Undersamples a reference image into a CineSample.

    Parameters
    ----------
    reference : array_like
        Reference image (time, x, y).
    maps : array_like
        Coil maps (coil, x, y).
    acceleration : float
        Target acceleration.
    center_lines : int or None
        Size of the center block.
    rng : numpy.random.Generator
        Random generator of the mask.

    Returns
    -------
    Dataset
        Consistent sample.

    """

    reference = np.asarray(getattr(reference, "values", reference))
    maps = np.asarray(getattr(maps, "values", maps))
    n_t, _, n_y = reference.shape

    mask = generate_mask(n_t, n_y, acceleration, center_lines, rng)
    full = EncodingOperator(maps, np.ones_like(mask.data)).coil_expand(reference)
    under = full * mask.data[:, None, None, :]

    return cine_sample(reference, full, under, mask, maps, acceleration)


def make_dataset(
    count: int,
    dims: Sequence[int] = (8, 32, 32, 4),
    r_range: Sequence[float] = (2.0, 8.0),
    seed: int = 0,
    center_lines: Optional[int] = None,
    progress: bool = False,
) -> List[Dataset]:
    r"""Generates a phantom dataset of consistent CineSamples.

    Sample i uses its own generator seeded with seed + i, so samples can be
    generated independently and in any order.

    Parameters
    ----------
    count : int
        Number of samples.
    dims : tuple of int, Optional
        (T, X, Y, C). Default is the desk scale (8, 32, 32, 4).
    r_range : tuple of float, Optional
        Range of the uniformly drawn acceleration. Default is (2, 8).
    seed : int, Optional
        Base seed. Default is 0.
    center_lines : int, Optional
        Size of the center block. Default scales with Y.
    progress : bool, Optional
        Display a progress bar. Default is False.

    Returns
    -------
    list of Dataset
        Samples.

    Raises
    ------
    ConfigurationError
        If the acceleration range is not within [1, Y].

    """

    n_t, n_x, n_y, n_c = dims
    r_min, r_max = float(r_range[0]), float(r_range[1])

    if not 1 <= r_min <= r_max <= n_y:
        raise ConfigurationError(f"acceleration range {r_range} not within [1, {n_y}]")

    maps = generate_coil_maps(n_c, n_x, n_y)
    samples = []

    for i in tqdm.tqdm(range(count), ncols=60, disable=not progress):
        rng = make_rng(seed + i)
        reference = generate_phantom(n_t, n_x, n_y, rng)
        acceleration = rng.uniform(r_min, r_max) if r_max > r_min else r_min
        samples.append(make_sample(reference, maps, acceleration, center_lines, rng))

    return samples
