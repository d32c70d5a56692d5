#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import struct

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..errors import TensorFormatError

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

MAGIC = b"CTNS"
VERSION = 1
DTYPES = {0: np.dtype("<c16"), 1: np.dtype("<c8")}
_CODES = {np.dtype(np.complex128): 0, np.dtype(np.complex64): 1}
_PREFIX = struct.Struct("<4sBBB")


def encode_tensor(tensor: NDArray) -> bytes:
    r"""Serializes a tensor to TensorFile bytes. Real tensors are stored as
    complex with a zero imaginary part."""

    tensor = np.asarray(tensor)

    if not np.iscomplexobj(tensor):
        tensor = tensor.astype(np.complex64 if tensor.dtype == np.float32 else np.complex128)

    code = _CODES[tensor.dtype]
    header = _PREFIX.pack(MAGIC, VERSION, code, tensor.ndim)
    header += struct.pack(f"<{tensor.ndim}Q", *tensor.shape)

    return header + np.ascontiguousarray(tensor, dtype=DTYPES[code]).tobytes()


def decode_tensor(data: bytes) -> NDArray:
    r"""Parses TensorFile bytes.

    Raises
    ------
    TensorFormatError
        If the bytes violate the format, naming the byte offset.

    """

    if len(data) < _PREFIX.size:
        raise TensorFormatError("truncated header", len(data))

    magic, version, code, ndim = _PREFIX.unpack_from(data, 0)

    if magic != MAGIC:
        raise TensorFormatError(f"bad magic {magic!r}", 0)

    if version != VERSION:
        raise TensorFormatError(f"unsupported format version {version}", 4)

    if code not in DTYPES:
        raise TensorFormatError(f"unknown dtype code {code}", 5)

    offset = _PREFIX.size

    if len(data) < offset + 8 * ndim:
        raise TensorFormatError("truncated dims", len(data))

    dims = struct.unpack_from(f"<{ndim}Q", data, offset)
    offset += 8 * ndim

    expected = int(np.prod(dims, dtype=np.int64)) * DTYPES[code].itemsize

    if len(data) - offset != expected:
        raise TensorFormatError(
            f"payload of {len(data) - offset} bytes, expected {expected}",
            min(len(data), offset + expected),
        )

    return np.frombuffer(data, dtype=DTYPES[code], offset=offset).reshape(dims).copy()


def write_tensor(path: str, tensor: NDArray):
    r"""Writes a tensor to a TensorFile.

    The file holds the magic "CTNS", a format version (u8), a dtype code
    (u8, 0 for complex128 and 1 for complex64), the number of dims (u8),
    the dims (u64 little-endian) and the row-major (re, im) payload.

    Parameters
    ----------
    path : str
        Path of the file.
    tensor : numpy.ndarray
        Tensor.

    """

    with open(path, "wb") as file:
        file.write(encode_tensor(tensor))


def read_tensor(path: str) -> NDArray:
    r"""Reads a TensorFile.

    Parameters
    ----------
    path : str
        Path of the file.

    Returns
    -------
    numpy.ndarray
        Complex tensor.

    Raises
    ------
    TensorFormatError
        If the file violates the format.

    """

    with open(path, "rb") as file:
        return decode_tensor(file.read())
