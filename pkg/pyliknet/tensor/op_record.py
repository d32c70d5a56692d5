#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from dataclasses import dataclass
from typing import Callable, Tuple

# 3rd party imports
import numpy as np

# Local imports
from ..errors import ShapeError

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


@dataclass(frozen=True)
class OpRecord:
    r"""Record of a differentiable forward call.

    Attributes
    ----------
    name : str
        Name of the operation.
    out_shapes : tuple of tuple
        Dimensions of each output of the forward call.
    pullback : callable
        Maps the output cotangents to the input cotangents.

    """

    name: str
    out_shapes: Tuple[Tuple[int, ...], ...]
    pullback: Callable


def backward(record: OpRecord, cotangent):
    r"""Propagates output cotangents back to the inputs of a recorded op.

    Cotangents follow the convention dL/dRe(z) + i dL/dIm(z) for a real
    scalar loss L.

    Parameters
    ----------
    record : OpRecord
        Record captured by the ``*_vjp`` variant of an operation.
    cotangent : numpy.ndarray or tuple of numpy.ndarray
        Cotangent of each output.

    Returns
    -------
    tuple
        Cotangents of the inputs, in the order of the forward arguments.
        Parameter gradients are returned as dicts mirroring the parameters.

    Raises
    ------
    ShapeError
        If the cotangent dimensions differ from the recorded outputs.

    """

    if isinstance(cotangent, tuple):
        cotangents = cotangent
    else:
        cotangents = (cotangent,)

    if len(cotangents) != len(record.out_shapes):
        raise ShapeError(
            f"{record.name} expects {len(record.out_shapes)} cotangent(s), "
            f"got {len(cotangents)}"
        )

    for g, shape in zip(cotangents, record.out_shapes):
        if np.shape(g) != tuple(shape):
            raise ShapeError(
                f"cotangent dims mismatch in {record.name}", np.shape(g), shape
            )

    return record.pullback(*[np.asarray(g) for g in cotangents])
