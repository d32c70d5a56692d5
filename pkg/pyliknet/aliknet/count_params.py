#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Dict

# 3rd party imports
import numpy as np

# Local imports
from .init_params import init_params
from .network_config import NetworkConfig

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

REFERENCE_PARAMETER_COUNT = 2_477_961


def count_params(params) -> int:
    r"""Number of real degrees of freedom of a parameter tree; a complex
    scalar counts as 2.

    Parameters
    ----------
    params : dict or list or numpy.ndarray
        Parameters.

    Returns
    -------
    int
        Parameter count.

    """

    if isinstance(params, dict):
        return sum(count_params(v) for v in params.values())

    if isinstance(params, (list, tuple)):
        return sum(count_params(v) for v in params)

    arr = np.asarray(params)

    return int(arr.size * (2 if np.iscomplexobj(arr) else 1))


def param_report(config: NetworkConfig) -> Dict[str, int]:
    r"""Per-component parameter counts of a configuration, compared with the
    reference count of the full-scale network.

    Parameters
    ----------
    config : NetworkConfig
        Network configuration.

    Returns
    -------
    dict
        Counts per component ("knet", "kdc", "unet", "lowrank", "idc",
        "isl"), "total", "reference" and "difference" = total - reference.

    """

    params = init_params(config)
    components = ("knet", "kdc", "unet", "lowrank", "idc", "isl")

    report = {
        name: sum(count_params(it.get(name, {})) for it in params)
        for name in components
    }
    report["total"] = count_params(params)
    report["reference"] = REFERENCE_PARAMETER_COUNT
    report["difference"] = report["total"] - REFERENCE_PARAMETER_COUNT

    return report
