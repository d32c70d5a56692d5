#!/usr/bin/env python
# -*- coding: utf-8 -*-

# 3rd party imports
import numpy as np
import xarray as xr

# Local imports
from ..mri import EncodingOperator
from .iteration_state import IterationState

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def init_state(sample: xr.Dataset, dtype=np.complex128) -> IterationState:
    r"""Initial state of the unrolled network: the zero-filled image
    x0 = A^H y_u and the undersampled k-space y0 = y_u.

    Parameters
    ----------
    sample : xarray.Dataset
        Sample from pyliknet.mri.cine_sample.
    dtype : numpy.dtype, Optional
        Working precision. Default is complex128.

    Returns
    -------
    IterationState
        Initial state.

    """

    op = EncodingOperator(
        sample.maps.data.astype(dtype), sample.mask.data.astype(np.finfo(dtype).dtype)
    )
    y_u = sample.under_kspace.data.astype(dtype)

    return IterationState(x=op.adjoint(y_u), y=y_u.copy(), op=op, y_u=y_u)
