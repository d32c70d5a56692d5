#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from dataclasses import dataclass, field
from typing import List, Optional

# 3rd party imports
import numpy as np

# Local imports
from .nrmse import nrmse
from .psnr import psnr
from .ssim import ssim_frames

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


@dataclass
class MetricReport:
    r"""Image quality of a reconstruction, overall and per frame."""

    nrmse: float
    psnr: float
    ssim: float
    per_frame: List[dict] = field(default_factory=list)

    def to_dict(self, config: Optional[dict] = None) -> dict:
        r"""Report with the fixed key names nrmse, psnr_db, ssim, per_frame
        and config."""
        return {
            "nrmse": self.nrmse,
            "psnr_db": self.psnr,
            "ssim": self.ssim,
            "per_frame": self.per_frame,
            "config": config or {},
        }


def evaluate(pred, ref) -> MetricReport:
    r"""NRMSE, PSNR and SSIM of a reconstructed cine image.

    Parameters
    ----------
    pred : array_like
        Reconstruction (time, x, y).
    ref : array_like
        Reference (time, x, y).

    Returns
    -------
    MetricReport
        Metrics over the whole sequence and per frame. SSIM is the mean of
        the per-frame values.

    Raises
    ------
    UndefinedMetricError
        If the reference is all zero.

    """

    pred, ref = np.asarray(pred), np.asarray(ref)
    total_nrmse = nrmse(pred, ref)
    frames_ssim = ssim_frames(pred, ref)
    per_frame = []

    for i_t, frame_ssim in enumerate(frames_ssim):
        per_frame.append(
            {
                "frame": i_t,
                "nrmse": nrmse(pred[i_t], ref[i_t]) if np.any(ref[i_t]) else float("nan"),
                "psnr_db": psnr(pred[i_t], ref[i_t]),
                "ssim": float(frame_ssim),
            }
        )

    return MetricReport(
        nrmse=total_nrmse,
        psnr=psnr(pred, ref),
        ssim=float(np.mean(frames_ssim)),
        per_frame=per_frame,
    )
