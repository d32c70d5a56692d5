#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .conv2dt import conv2dt, conv2dt_vjp
from .conv3d import conv3d, conv3d_vjp
from .convnd import convnd, convnd_vjp
from .dense import dense, dense_vjp
from .initializers import init_attention, init_conv, zeros_like_params
from .maxpool3d import maxpool3d, maxpool3d_vjp, pooled_shape
from .modrelu import modrelu, modrelu_vjp
from .se_attention import se_attention, se_attention_vjp
from .upsample3d import upsample3d, upsample3d_vjp

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = [
    "conv2dt",
    "conv2dt_vjp",
    "conv3d",
    "conv3d_vjp",
    "convnd",
    "convnd_vjp",
    "dense",
    "dense_vjp",
    "init_attention",
    "init_conv",
    "maxpool3d",
    "maxpool3d_vjp",
    "modrelu",
    "modrelu_vjp",
    "pooled_shape",
    "se_attention",
    "se_attention_vjp",
    "upsample3d",
    "upsample3d_vjp",
    "zeros_like_params",
]
