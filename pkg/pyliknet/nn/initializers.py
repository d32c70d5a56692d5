#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Dict, Sequence

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..tensor import tree_map

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def init_conv(
    rng: np.random.Generator,
    c_out: int,
    c_in: int,
    k_size: Sequence[int],
    bias: bool = True,
    gain: float = 1.0,
) -> Dict[str, NDArray]:
    r"""Complex convolution weights with variance gain^2 / fan_in.

    Parameters
    ----------
    rng : numpy.random.Generator
        Random generator.
    c_out : int
        Output channels.
    c_in : int
        Input channels.
    k_size : tuple of int
        Kernel extents. An empty tuple gives a channel-mixing matrix.
    bias : bool, Optional
        Add a zero complex bias. Default is True.
    gain : float, Optional
        Standard deviation gain. Default is 1.

    Returns
    -------
    dict
        {"kernel": ..., "bias": ...}.

    """

    shape = (c_out, c_in, *k_size)
    std = gain / np.sqrt(c_in * int(np.prod(k_size)) * 2)
    kernel = rng.normal(0.0, std, shape) + 1j * rng.normal(0.0, std, shape)
    out = {"kernel": kernel}

    if bias:
        out["bias"] = np.zeros(c_out, dtype=np.complex128)

    return out


def init_attention(
    rng: np.random.Generator, n_slots: int, ratio: int = 2
) -> Dict[str, NDArray]:
    r"""Real dense weights of a squeeze-and-excitation block over an axis of
    length n_slots (2 n_slots after real/imaginary concatenation)."""
    width = 2 * n_slots
    hidden = max(1, width // ratio)

    return {
        "w1": rng.normal(0.0, 1.0 / np.sqrt(width), (hidden, width)),
        "b1": np.zeros(hidden),
        "w2": rng.normal(0.0, 1.0 / np.sqrt(hidden), (width, hidden)),
        "b2": np.zeros(width),
    }


def zeros_like_params(params):
    r"""Nested copy of params with every array replaced by zeros."""
    return tree_map(np.zeros_like, params)
