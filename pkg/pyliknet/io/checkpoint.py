#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import json
import os
from typing import Optional

# 3rd party imports
import numpy as np

# Local imports
from ..aliknet import NetworkConfig, init_params
from ..errors import CheckpointMismatchError
from ..tensor import tree_leaves, tree_map
from .tensor_file import read_tensor, write_tensor

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

MANIFEST = "manifest.json"


def _write_tree(path, prefix, tree):
    entries = []

    for name, leaf in tree_leaves(tree, f"{prefix}."):
        leaf = np.asarray(leaf)
        file = f"{name}.ctns"
        write_tensor(os.path.join(path, file), leaf)
        entries.append(
            {
                "name": name,
                "file": file,
                "dims": list(leaf.shape),
                "real": not np.iscomplexobj(leaf),
            }
        )

    return entries


def _read_tree(path, prefix, template, entries):
    leaves = {}

    for name, leaf in tree_leaves(template, f"{prefix}."):
        entry = entries.get(name)

        if entry is None:
            raise CheckpointMismatchError(f"checkpoint has no entry {name}")

        if tuple(entry["dims"]) != np.shape(leaf):
            raise CheckpointMismatchError(
                f"entry {name} has dims {entry['dims']}, expected {list(np.shape(leaf))}"
            )

        value = read_tensor(os.path.join(path, entry["file"]))
        leaves[name] = np.real(value).copy() if entry["real"] else value

    names = iter(leaves.values())

    return tree_map(lambda _: next(names), template)


def save_checkpoint(
    path: str,
    params,
    network: NetworkConfig,
    step: int = 0,
    opt=None,
    training: Optional[dict] = None,
):
    r"""Writes parameters and optimizer state to a checkpoint directory.

    The directory holds manifest.json (configuration echo, step count and
    one entry per tensor with its file, dims and a real flag) and one
    TensorFile per parameter, first and second moment tensor.

    Parameters
    ----------
    path : str
        Checkpoint directory, created if needed.
    params : list of dict
        Parameters.
    network : NetworkConfig
        Network configuration.
    step : int, Optional
        Number of optimizer steps done. Default is 0.
    opt : OptimState, Optional
        Optimizer state.
    training : dict, Optional
        Training configuration echoed into the manifest.

    """

    os.makedirs(path, exist_ok=True)

    entries = _write_tree(path, "params", params)
    manifest = {
        "format": "pyliknet-checkpoint",
        "version": 1,
        "step": int(step),
        "network": network.to_dict(),
        "training": training or {},
        "optimizer": None,
    }

    if opt is not None:
        entries += _write_tree(path, "m", opt.m) + _write_tree(path, "v", opt.v)
        manifest["optimizer"] = {
            "step": opt.step,
            "lr": opt.lr,
            "beta1": opt.beta1,
            "beta2": opt.beta2,
            "eps": opt.eps,
        }

    manifest["entries"] = entries

    with open(os.path.join(path, MANIFEST), "w", encoding="utf-8") as file:
        json.dump(manifest, file, indent=2)


def load_checkpoint(path: str, network: Optional[NetworkConfig] = None) -> dict:
    r"""Reads a checkpoint directory.

    Parameters
    ----------
    path : str
        Checkpoint directory.
    network : NetworkConfig, Optional
        Expected network configuration. Default is the one of the manifest.

    Returns
    -------
    dict
        "params", "network", "step", "opt" (OptimState or None) and
        "training".

    Raises
    ------
    CheckpointMismatchError
        If the checkpoint does not match the network configuration.

    """

    # Local imports
    from ..training.adam import OptimState

    with open(os.path.join(path, MANIFEST), "r", encoding="utf-8") as file:
        manifest = json.load(file)

    stored = NetworkConfig.from_dict(manifest["network"])

    if network is not None and network.to_dict() != stored.to_dict():
        raise CheckpointMismatchError(
            f"checkpoint network {stored.variant} does not match the configuration"
        )

    network = stored
    template = init_params(network)
    entries = {e["name"]: e for e in manifest["entries"]}
    params = _read_tree(path, "params", template, entries)

    opt = None

    if manifest.get("optimizer"):
        opt = OptimState(
            m=_read_tree(path, "m", template, entries),
            v=_read_tree(path, "v", template, entries),
            **manifest["optimizer"],
        )

    return {
        "params": params,
        "network": network,
        "step": manifest["step"],
        "opt": opt,
        "training": manifest.get("training", {}),
    }
