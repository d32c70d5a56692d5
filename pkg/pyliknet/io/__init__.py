#!/usr/bin/env python
# -*- coding: utf-8 -*-

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

from .checkpoint import load_checkpoint, save_checkpoint
from .pgm import encode_pgm, error_map, quantize, write_pgm
from .run_config import RunConfig, load_run_config
from .sample_io import load_sample, save_sample
from .tensor_file import decode_tensor, encode_tensor, read_tensor, write_tensor

__all__ = [
    "RunConfig",
    "decode_tensor",
    "encode_pgm",
    "encode_tensor",
    "error_map",
    "load_checkpoint",
    "load_run_config",
    "load_sample",
    "quantize",
    "read_tensor",
    "save_checkpoint",
    "save_sample",
    "write_pgm",
    "write_tensor",
]
