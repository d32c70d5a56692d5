#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .adam import OptimState, adam_init, adam_step
from .evaluate_sweep import evaluate_sweep
from .grad_check import CASES, GradCheckReport, grad_check
from .loss import LossReport, loss, loss_vjp
from .objective import objective_vjp
from .train import TrainResult, cast_params, train, validate
from .train_config import TrainConfig

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = [
    "CASES",
    "GradCheckReport",
    "LossReport",
    "OptimState",
    "TrainConfig",
    "TrainResult",
    "adam_init",
    "adam_step",
    "cast_params",
    "evaluate_sweep",
    "grad_check",
    "loss",
    "loss_vjp",
    "objective_vjp",
    "train",
    "validate",
]
