#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .evaluate import MetricReport, evaluate
from .nrmse import nrmse
from .psnr import psnr
from .ssim import ssim, ssim_frames

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = ["MetricReport", "evaluate", "nrmse", "psnr", "ssim", "ssim_frames"]
