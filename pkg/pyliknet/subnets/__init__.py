#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .knet import init_knet, knet_forward, knet_forward_vjp
from .lowrank import init_lowrank, lowrank_forward, lowrank_forward_vjp
from .patches import coverage, patch_merge, patch_split, patch_windows
from .svt import svt_backward, svt_patch, svt_patch_surrogate, svt_patch_vjp
from .unet import init_unet, unet_forward, unet_forward_vjp

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = [
    "coverage",
    "init_knet",
    "init_lowrank",
    "init_unet",
    "knet_forward",
    "knet_forward_vjp",
    "lowrank_forward",
    "lowrank_forward_vjp",
    "patch_merge",
    "patch_split",
    "patch_windows",
    "svt_backward",
    "svt_patch",
    "svt_patch_surrogate",
    "svt_patch_vjp",
    "unet_forward",
    "unet_forward_vjp",
]
