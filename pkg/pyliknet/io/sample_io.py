#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import json
import os

# 3rd party imports
import numpy as np
from xarray.core.dataset import Dataset

# Local imports
from ..mri import cine_sample
from .tensor_file import read_tensor, write_tensor

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

VARIABLES = ("reference", "full_kspace", "under_kspace", "mask", "maps")


def save_sample(path: str, sample: Dataset):
    r"""Writes a CineSample to a directory of TensorFiles plus sample.json.

    Parameters
    ----------
    path : str
        Sample directory, created if needed.
    sample : Dataset
        Sample.

    """

    os.makedirs(path, exist_ok=True)

    for name in VARIABLES:
        write_tensor(os.path.join(path, f"{name}.ctns"), sample[name].data)

    meta = {
        "acceleration": float(sample.attrs["acceleration"]),
        "dims": {name: list(sample[name].shape) for name in VARIABLES},
    }

    with open(os.path.join(path, "sample.json"), "w", encoding="utf-8") as file:
        json.dump(meta, file, indent=2)


def load_sample(path: str) -> Dataset:
    r"""Reads a CineSample written by :func:`save_sample`.

    Parameters
    ----------
    path : str
        Sample directory.

    Returns
    -------
    Dataset
        Sample.

    """

    with open(os.path.join(path, "sample.json"), "r", encoding="utf-8") as file:
        meta = json.load(file)

    data = {name: read_tensor(os.path.join(path, f"{name}.ctns")) for name in VARIABLES}
    data["mask"] = np.real(data["mask"])

    return cine_sample(acceleration=meta["acceleration"], **data)
