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


def inner(a: NDArray, b: NDArray) -> complex:
    r"""Complex inner product <a, b> = sum(conj(a) * b).

    Parameters
    ----------
    a : numpy.ndarray
        Left operand (conjugated).
    b : numpy.ndarray
        Right operand.

    Returns
    -------
    complex
        Inner product.

    """

    if np.shape(a) != np.shape(b):
        raise ShapeError("inner product operands differ", np.shape(a), np.shape(b))

    return complex(np.vdot(np.ravel(a), np.ravel(b)))
