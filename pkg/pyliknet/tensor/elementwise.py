#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Tuple, Union

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..errors import ShapeError
from .op_record import OpRecord

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

_BINARY = ("add", "sub", "mul")
_UNARY = ("conj", "abs", "scale")


def _check_operands(kind, a, b):
    if kind not in _BINARY + _UNARY:
        raise NotImplementedError(f"elementwise kind {kind} is not implemented!!")

    if kind in _BINARY:
        if b is None:
            raise ValueError(f"{kind} requires two operands")

        if np.ndim(b) and np.ndim(a) and np.shape(a) != np.shape(b):
            raise ShapeError(f"operands of {kind} differ", np.shape(a), np.shape(b))

    if kind == "scale" and (b is None or np.ndim(b)):
        raise ValueError("scale expects a scalar factor")


def _reduce_to(g, operand):
    # scalar operands receive the sum of the broadcast cotangent
    if np.ndim(operand) == 0 and np.ndim(g):
        return np.sum(g)

    return g


def elementwise_vjp(
    kind: str, a: NDArray, b: Union[NDArray, complex, float, None] = None
) -> Tuple[NDArray, OpRecord]:
    r"""Elementwise operation with its differentiation record.

    Parameters
    ----------
    kind : {"add", "sub", "mul", "conj", "abs", "scale"}
        Operation kind.
    a : numpy.ndarray
        First operand.
    b : numpy.ndarray or scalar, Optional
        Second operand for binary kinds, factor for scale.

    Returns
    -------
    out : numpy.ndarray
        Result of the operation.
    record : OpRecord
        Differentiation record.

    See Also
    --------
    pyliknet.tensor.elementwise

    """

    _check_operands(kind, a, b)
    a = np.asarray(a)

    if kind == "add":
        out = a + b

        def pullback(g):
            return _reduce_to(g, a), _reduce_to(g, b)

    elif kind == "sub":
        out = a - b

        def pullback(g):
            return _reduce_to(g, a), _reduce_to(-g, b)

    elif kind == "mul":
        out = a * b

        def pullback(g):
            return _reduce_to(np.conj(b) * g, a), _reduce_to(np.conj(a) * g, b)

    elif kind == "conj":
        out = np.conj(a)

        def pullback(g):
            return (np.conj(g),)

    elif kind == "abs":
        mag = np.abs(a)
        out = mag.astype(np.result_type(a, np.complex64))

        def pullback(g):
            phase = np.divide(a, mag, out=np.zeros_like(a), where=mag > 0)
            return (np.real(g) * phase,)

    else:
        out = b * a

        def pullback(g):
            return (np.conj(b) * g,)

    return out, OpRecord(f"elementwise.{kind}", (np.shape(out),), pullback)


def elementwise(
    kind: str, a: NDArray, b: Union[NDArray, complex, float, None] = None
) -> NDArray:
    r"""Elementwise complex tensor arithmetic.

    Binary kinds require equal dims; the only broadcasting allowed is between
    a scalar and a tensor.

    Parameters
    ----------
    kind : {"add", "sub", "mul", "conj", "abs", "scale"}
        Operation kind. abs returns a complex tensor with zero imaginary part.
    a : numpy.ndarray
        First operand.
    b : numpy.ndarray or scalar, Optional
        Second operand for binary kinds, factor for scale.

    Returns
    -------
    numpy.ndarray
        Result of the operation.

    Raises
    ------
    ShapeError
        If the dims of a binary operation differ.
    NotImplementedError
        If kind is unknown.

    Examples
    --------
    >>> import numpy as np
    >>> from pyliknet import tensor
    >>> tensor.elementwise("abs", np.array([3 + 4j]))
    array([5.+0.j])

    """

    out, _ = elementwise_vjp(kind, a, b)

    return out
