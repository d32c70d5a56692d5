#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import dataclasses
from dataclasses import dataclass
from typing import Optional, Tuple

# 3rd party imports
import numpy as np

# Local imports
from ..errors import ConfigurationError

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

PRECISIONS = {"float64": np.complex128, "float32": np.complex64}


@dataclass
class TrainConfig:
    r"""Training hyperparameters.

    Attributes
    ----------
    steps : int
        Number of optimizer steps, used when epochs is None.
    epochs : int
        Passes over the dataset. Overrides steps.
    batch_size : int
        Samples per step.
    lr : float
        Adam learning rate.
    r_range : tuple of float
        Range of the acceleration drawn at every step.
    seed : int
        Seed of the initialization and of the masks.
    checkpoint_every : int
        Checkpoint cadence in steps, 0 to disable.
    log_every : int
        Logging cadence in steps.
    precision : {"float64", "float32"}
        Working precision.
    loss_normalization : {"element", "image"}
        Normalization of the loss terms.
    center_lines : int
        Fully sampled center lines. Default scales with the ky extent.
    average_window : int
        Window of the moving-average loss.

    """

    steps: int = 1000
    epochs: Optional[int] = None
    batch_size: int = 1
    lr: float = 1e-4
    r_range: Tuple[float, float] = (2.0, 8.0)
    seed: int = 0
    checkpoint_every: int = 0
    log_every: int = 50
    precision: str = "float64"
    loss_normalization: str = "element"
    center_lines: Optional[int] = None
    average_window: int = 200

    def __post_init__(self):
        self.r_range = tuple(float(r) for r in self.r_range)

        if self.batch_size < 1:
            raise ConfigurationError(f"batch size must be >= 1, got {self.batch_size}")

        if len(self.r_range) != 2 or not 1 <= self.r_range[0] <= self.r_range[1]:
            raise ConfigurationError(f"invalid acceleration range {self.r_range}")

        if self.precision not in PRECISIONS:
            raise ConfigurationError(f"unknown precision {self.precision}")

        if self.loss_normalization not in ("element", "image"):
            raise ConfigurationError(
                f"unknown loss normalization {self.loss_normalization}"
            )

    @property
    def dtype(self):
        return PRECISIONS[self.precision]

    def n_steps(self, n_samples: int) -> int:
        r"""Number of optimizer steps for a dataset of n_samples."""
        if self.epochs is None:
            return self.steps

        return self.epochs * -(-n_samples // self.batch_size)

    def to_dict(self) -> dict:
        out = dataclasses.asdict(self)
        out["r_range"] = list(self.r_range)

        return out

    @classmethod
    def from_dict(cls, values: dict) -> "TrainConfig":
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(values) - names

        if unknown:
            raise ConfigurationError(f"unknown training keys {sorted(unknown)}")

        return cls(**values)
