#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from dataclasses import dataclass, field
from typing import List, Optional

# 3rd party imports
from numpy.typing import NDArray

# Local imports
from ..mri import EncodingOperator

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


@dataclass
class IterationState:
    r"""State carried between unrolled iterations.

    Attributes
    ----------
    x : numpy.ndarray
        Cine image (time, x, y).
    y : numpy.ndarray
        Multi-coil k-space (time, coil, kx, ky).
    op : EncodingOperator
        Encoding operator of the sample.
    y_u : numpy.ndarray
        Undersampled k-space of the sample.
    p, q : numpy.ndarray
        Last UNet and low-rank outputs, None before the first iteration.
    r : numpy.ndarray
        Last k-space network output.
    trace : list of str
        Names of the blocks executed by a traced forward.

    """

    x: NDArray
    y: NDArray
    op: EncodingOperator
    y_u: NDArray
    p: Optional[NDArray] = None
    q: Optional[NDArray] = None
    r: Optional[NDArray] = None
    trace: List[str] = field(default_factory=list)
