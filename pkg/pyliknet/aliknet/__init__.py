#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .count_params import REFERENCE_PARAMETER_COUNT, count_params, param_report
from .forward import final_image, forward, forward_vjp
from .init_params import init_params
from .init_state import init_state
from .iteration_state import IterationState
from .network_config import VARIANTS, NetworkConfig

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = [
    "IterationState",
    "NetworkConfig",
    "REFERENCE_PARAMETER_COUNT",
    "VARIANTS",
    "count_params",
    "final_image",
    "forward",
    "forward_vjp",
    "init_params",
    "init_state",
    "param_report",
]
