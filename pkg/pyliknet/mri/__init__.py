#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .adjoint_encode import adjoint_encode
from .casorati import casorati, inverse_casorati
from .containers import cine_image, cine_sample, coil_maps, kspace, sampling_mask
from .encoding_operator import EncodingOperator
from .forward_encode import forward_encode
from .generate_coil_maps import generate_coil_maps
from .generate_mask import default_center_lines, generate_mask
from .generate_phantom import generate_phantom
from .make_dataset import make_dataset, make_sample

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = [
    "EncodingOperator",
    "adjoint_encode",
    "casorati",
    "cine_image",
    "cine_sample",
    "coil_maps",
    "default_center_lines",
    "forward_encode",
    "generate_coil_maps",
    "generate_mask",
    "generate_phantom",
    "inverse_casorati",
    "kspace",
    "make_dataset",
    "make_sample",
    "sampling_mask",
]
