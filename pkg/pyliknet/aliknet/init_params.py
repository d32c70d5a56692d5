#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import List, Optional

# 3rd party imports
import numpy as np

# Local imports
from ..consistency import init_image_dc, init_isl, init_kspace_dc
from ..subnets import init_knet, init_lowrank, init_unet
from ..tensor import make_rng
from .network_config import NetworkConfig

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def init_params(
    config: NetworkConfig, seed: int = 0, rng: Optional[np.random.Generator] = None
) -> List[dict]:
    r"""Initial parameters of every unrolled iteration. Weights are not shared
    across iterations; only the blocks enabled in the configuration get
    parameters.

    Parameters
    ----------
    config : NetworkConfig
        Network configuration.
    seed : int, Optional
        Seed used when rng is None. Default is 0.
    rng : numpy.random.Generator, Optional
        Random generator.

    Returns
    -------
    list of dict
        One dict per iteration with keys among "knet", "kdc", "unet",
        "lowrank", "idc" and "isl".

    """

    config.validate()

    if rng is None:
        rng = make_rng(seed)

    params = []

    for _ in range(config.n_iter):
        iteration = {}

        if config.enable_kspace_branch:
            iteration["knet"] = init_knet(
                rng, config.n_coils, config.kspace_filters, config.k_kspace, config.ratio
            )
            iteration["kdc"] = init_kspace_dc()

            if not config.enable_attention:
                del iteration["knet"]["att0"], iteration["knet"]["att1"]

        if config.enable_image_net:
            iteration["unet"] = init_unet(
                rng,
                config.n_frames,
                config.filters,
                config.k_spatial,
                config.k_temporal,
                config.ratio,
            )

            if not config.enable_attention:
                del iteration["unet"]["dec0"]["att"], iteration["unet"]["dec1"]["att"]

        if config.enable_lowrank:
            iteration["lowrank"] = init_lowrank(config.patch_spec)

        if config.image_branch:
            iteration["idc"] = init_image_dc()

        if config.enable_isl:
            iteration["isl"] = init_isl()

        params.append(iteration)

    return params
