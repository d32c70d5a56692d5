#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .complex_tensor import complex_tensor
from .elementwise import elementwise, elementwise_vjp
from .fft2c import fft2c, fft2c_vjp, ifft2c, ifft2c_vjp
from .inner import inner
from .make_rng import make_rng
from .numerical_cotangent import directional_derivative, numerical_cotangent
from .op_record import OpRecord, backward
from .tree import tree_axpy, tree_inner, tree_leaves, tree_map

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = [
    "OpRecord",
    "backward",
    "complex_tensor",
    "directional_derivative",
    "elementwise",
    "elementwise_vjp",
    "fft2c",
    "fft2c_vjp",
    "ifft2c",
    "ifft2c_vjp",
    "inner",
    "make_rng",
    "numerical_cotangent",
    "tree_axpy",
    "tree_inner",
    "tree_leaves",
    "tree_map",
]
