#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Callable, Sequence, Tuple

# 3rd party imports
import numpy as np

# Local imports
from ..aliknet import IterationState, NetworkConfig, forward_vjp
from .loss import LossReport, loss_vjp

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def objective_vjp(
    state: IterationState,
    params: Sequence[dict],
    config: NetworkConfig,
    ref_x,
    ref_y,
    normalization: str = "element",
) -> Tuple[LossReport, IterationState, Callable]:
    r"""Training loss of the unrolled network with its pullback.

    The image term is evaluated on the image branch output or, without image
    branch, on the coil-combined k-space.

    Parameters
    ----------
    state : IterationState
        Initial state.
    params : list of dict
        Parameters.
    config : NetworkConfig
        Network configuration.
    ref_x : numpy.ndarray
        Reference image.
    ref_y : numpy.ndarray
        Fully sampled k-space.
    normalization : {"element", "image"}, Optional
        Loss normalization. Default is "element".

    Returns
    -------
    report : LossReport
        Loss terms.
    state : IterationState
        Final state of the network.
    pullback : callable
        Returns (g_x0, g_y0, grads) with grads mirroring params.

    """

    out, net_pullback = forward_vjp(state, params, config)
    op = out.op

    x_hat = out.x if config.image_branch else op.coil_combine(out.y)
    report, loss_pullback = loss_vjp(x_hat, out.y, ref_x, ref_y, normalization)

    def pullback():
        g_x, g_y = loss_pullback()

        if not config.image_branch:
            g_y = g_y + op.coil_expand(g_x)
            g_x = np.zeros_like(out.x)

        return net_pullback(g_x, g_y)

    return report, out, pullback
