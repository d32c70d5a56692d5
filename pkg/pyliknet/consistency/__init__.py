#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .image_dc import image_dc, image_dc_vjp, init_image_dc
from .isl import init_isl, isl, isl_vjp
from .kspace_dc import init_kspace_dc, kspace_dc, kspace_dc_vjp

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = [
    "image_dc",
    "image_dc_vjp",
    "init_image_dc",
    "init_isl",
    "init_kspace_dc",
    "isl",
    "isl_vjp",
    "kspace_dc",
    "kspace_dc_vjp",
]
