#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pyliknet import (
    aliknet,
    consistency,
    io,
    metrics,
    mri,
    nn,
    plot,
    subnets,
    tensor,
    training,
)

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = [
    "aliknet",
    "consistency",
    "io",
    "metrics",
    "mri",
    "nn",
    "plot",
    "subnets",
    "tensor",
    "training",
]
