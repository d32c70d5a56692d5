#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import copy
import json
import os
from dataclasses import dataclass, field
from typing import Optional

# Local imports
from ..aliknet import NetworkConfig
from ..errors import ConfigurationError
from ..training.train_config import TrainConfig

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

RUN_CFG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "config.json")

_DIMS = {"frames": "n_frames", "x": "n_x", "y": "n_y", "coils": "n_coils"}
_DATA_KEYS = ("samples", "validation_samples", "validation_acceleration")


def _merge(default: dict, user: dict, section: str, open_keys=()) -> dict:
    out = copy.deepcopy(default)

    for key, value in user.items():
        if key not in default and key not in open_keys:
            raise ConfigurationError(f"unknown key {section}.{key}")

        if isinstance(default.get(key), dict):
            if not isinstance(value, dict):
                raise ConfigurationError(f"{section}.{key} must be an object")

            out[key] = _merge(default[key], value, f"{section}.{key}")
        else:
            out[key] = value

    return out


@dataclass
class RunConfig:
    r"""Parsed run configuration with sections dims, network, training and
    paths."""

    dims: dict
    network: dict
    training: dict
    paths: dict = field(default_factory=dict)

    def network_config(self) -> NetworkConfig:
        values = dict(self.network)
        variant = values.pop("variant", "A-LIKNet")
        base = NetworkConfig.from_variant(variant).to_dict()
        base.update(values)
        base.update({_DIMS[k]: int(v) for k, v in self.dims.items()})

        return NetworkConfig.from_dict(base)

    def train_config(self) -> TrainConfig:
        values = {k: v for k, v in self.training.items() if k not in _DATA_KEYS}

        return TrainConfig.from_dict(values)

    @property
    def samples(self) -> int:
        return int(self.training["samples"])

    @property
    def validation_samples(self) -> int:
        return int(self.training["validation_samples"])

    @property
    def validation_acceleration(self) -> float:
        return float(self.training["validation_acceleration"])

    def to_dict(self) -> dict:
        return {
            "dims": dict(self.dims),
            "network": dict(self.network),
            "training": dict(self.training),
            "paths": dict(self.paths),
        }


def load_run_config(path: Optional[str] = None) -> RunConfig:
    r"""Reads a run configuration.

    The document is merged over the packaged defaults
    (`pyliknet/io/config.json`), so every key is optional.

    Parameters
    ----------
    path : str, Optional
        Path of the JSON document. Default uses the packaged defaults only.

    Returns
    -------
    RunConfig
        Run configuration.

    Raises
    ------
    ConfigurationError
        If the document holds an unknown key or an inconsistent value.

    """

    with open(RUN_CFG_PATH, "r", encoding="utf-8") as file:
        default = json.load(file)

    user = {}

    if path is not None:
        with open(path, "r", encoding="utf-8") as file:
            try:
                user = json.load(file)
            except json.JSONDecodeError as error:
                raise ConfigurationError(f"{path} is not valid JSON: {error}") from error

    # toggles are not in the defaults since they follow the variant
    toggles = [f for f in NetworkConfig.__dataclass_fields__ if f.startswith("enable_")]

    sections = {}

    for key, value in user.items():
        if key not in default:
            raise ConfigurationError(f"unknown key {key}")

        if not isinstance(value, dict):
            raise ConfigurationError(f"{key} must be an object")

    for key in default:
        open_keys = toggles if key == "network" else ()
        sections[key] = _merge(default[key], user.get(key, {}), key, open_keys)

    run = RunConfig(**sections)

    # fail early on invalid combinations
    run.network_config()
    run.train_config()

    return run
