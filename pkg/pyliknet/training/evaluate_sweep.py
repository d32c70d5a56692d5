#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Optional, Sequence

# 3rd party imports
import numpy as np
import pandas as pd
import xarray as xr

# Local imports
from ..aliknet import NetworkConfig, final_image, forward, init_state
from ..metrics import evaluate
from ..mri import make_sample
from ..tensor import make_rng

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def evaluate_sweep(
    params,
    network: NetworkConfig,
    samples: Sequence[xr.Dataset],
    accelerations: Sequence[float] = (2, 4, 8),
    seed: int = 0,
    center_lines: Optional[int] = None,
) -> pd.DataFrame:
    r"""Evaluates one trained network at several accelerations without
    retraining.

    Each reference is undersampled at every acceleration with a mask drawn
    from a generator seeded with seed, and both the reconstruction and the
    zero-filled image are scored.

    Parameters
    ----------
    params : list of dict
        Trained parameters.
    network : NetworkConfig
        Network configuration.
    samples : list of xarray.Dataset
        Test samples; their references and coil maps are used.
    accelerations : list of float, Optional
        Accelerations. Default is (2, 4, 8).
    seed : int, Optional
        Seed of the masks. Default is 0.
    center_lines : int, Optional
        Fully sampled center lines.

    Returns
    -------
    pandas.DataFrame
        Mean nrmse, psnr_db and ssim indexed by (acceleration, method),
        method being "recon" or "zero_filled".

    """

    rows = []

    for acceleration in accelerations:
        rng = make_rng(seed)

        for sample in samples:
            sample = make_sample(
                sample.reference, sample.maps, float(acceleration), center_lines, rng
            )
            state = init_state(sample)
            recon = final_image(forward(state, params, network), network)

            for method, image in (("recon", recon), ("zero_filled", state.x)):
                report = evaluate(image, sample.reference.data)
                rows.append(
                    {
                        "acceleration": float(acceleration),
                        "method": method,
                        "nrmse": report.nrmse,
                        "psnr_db": report.psnr,
                        "ssim": report.ssim,
                    }
                )

    frame = pd.DataFrame(rows)

    return frame.groupby(["acceleration", "method"]).mean()
