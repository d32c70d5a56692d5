#!/usr/bin/env python
# -*- coding: utf-8 -*-

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = [
    "ShapeError",
    "ConfigurationError",
    "InfeasibleAccelerationError",
    "UndefinedMetricError",
    "NumericError",
    "TensorFormatError",
    "CheckpointMismatchError",
]


class ShapeError(ValueError):
    r"""Raised when the dimensions of the operands are incompatible."""

    category = "shape"

    def __init__(self, message: str, *dims):
        if dims:
            message = f"{message}: " + " vs ".join(str(list(d)) for d in dims)

        super().__init__(message)
        self.dims = dims


class ConfigurationError(ValueError):
    r"""Raised when a configuration value is invalid or inconsistent."""

    category = "config"


class InfeasibleAccelerationError(ConfigurationError):
    r"""Raised when the requested acceleration leaves no line to sample."""


class UndefinedMetricError(ValueError):
    r"""Raised when a metric is undefined for the given reference."""

    category = "metric"


class NumericError(RuntimeError):
    r"""Raised on numerical failure (SVD non-convergence, non-finite loss)."""

    category = "numeric"

    def __init__(self, message: str, step: int = None, norms: dict = None):
        super().__init__(message)
        self.step = step
        self.norms = norms or {}


class TensorFormatError(ValueError):
    r"""Raised when a tensor file violates the format. Carries the byte
    offset at which the violation was detected."""

    category = "format"

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CheckpointMismatchError(ConfigurationError):
    r"""Raised when a checkpoint does not match the requested configuration."""
