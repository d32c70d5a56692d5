#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Dict, Mapping, Optional, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..nn import (
    conv3d_vjp,
    init_attention,
    init_conv,
    modrelu_vjp,
    se_attention_vjp,
    zeros_like_params,
)
from ..tensor import OpRecord

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def init_knet(
    rng: np.random.Generator,
    n_coils: int,
    filters: int = 4,
    k_size: int = 3,
    ratio: int = 2,
) -> Dict[str, dict]:
    r"""Random bias-free parameters of the three-layer k-space network.

    Parameters
    ----------
    rng : numpy.random.Generator
        Random generator.
    n_coils : int
        Number of coils, sets the width of the coil attention.
    filters : int, Optional
        Hidden filter count. Default is 4.
    k_size : int, Optional
        Kernel extent along coil, kx and ky. Default is 3.
    ratio : int, Optional
        Attention reduction ratio. Default is 2.

    Returns
    -------
    dict
        Kernels "conv0", "conv1", "conv2" and attentions "att0", "att1".

    """

    k = (k_size,) * 3

    return {
        "conv0": init_conv(rng, filters, 1, k, bias=False),
        "att0": init_attention(rng, n_coils, ratio),
        "conv1": init_conv(rng, filters, filters, k, bias=False),
        "att1": init_attention(rng, n_coils, ratio),
        "conv2": init_conv(rng, 1, filters, k, bias=False, gain=0.1),
    }


def knet_forward_vjp(
    y: NDArray,
    params: Mapping[str, dict],
    attention: bool = True,
    residual: bool = True,
    trace: Optional[list] = None,
) -> Tuple[NDArray, OpRecord]:
    r"""knet_forward with its differentiation record. The pullback returns
    (g_y, grads) with grads mirroring params."""

    y = np.asarray(y)
    h = y[:, None]
    records = []

    for layer in range(3):
        h, rec_conv = conv3d_vjp(h, params[f"conv{layer}"]["kernel"])
        rec_act = rec_att = None

        if layer < 2:
            # bias-free layers: ModReLU with its bias fixed at zero
            h, rec_act = modrelu_vjp(h, None, axis=1)

            if attention and f"att{layer}" in params:
                h, rec_att = se_attention_vjp(h, params[f"att{layer}"], axis=2)

                if trace is not None:
                    trace.append("se_attention.coil")

        records.append((rec_conv, rec_act, rec_att))

    out = h[:, 0] + y if residual else h[:, 0]

    def pullback(g):
        grads = {}
        g_h = g[:, None]

        for layer in reversed(range(3)):
            rec_conv, rec_act, rec_att = records[layer]

            if layer < 2:
                if rec_att is not None:
                    g_h, grads[f"att{layer}"] = rec_att.pullback(g_h)
                elif f"att{layer}" in params:
                    grads[f"att{layer}"] = zeros_like_params(params[f"att{layer}"])

                g_h, _ = rec_act.pullback(g_h)

            g_h, g_kernel, _ = rec_conv.pullback(g_h)
            grads[f"conv{layer}"] = {"kernel": g_kernel}

        g_y = g_h[:, 0] + g if residual else g_h[:, 0]

        return g_y, grads

    return out, OpRecord("knet", (out.shape,), pullback)


def knet_forward(
    y: NDArray,
    params: Mapping[str, dict],
    attention: bool = True,
    residual: bool = True,
) -> NDArray:
    r"""Three-layer complex k-space network.

    Three bias-free 3-D convolutions over (coil, kx, ky), the first two
    followed by ModReLU and coil attention, the last one linear with a single
    output channel.

    Parameters
    ----------
    y : numpy.ndarray
        Multi-coil k-space (time, coil, kx, ky).
    params : dict
        Parameters from init_knet.
    attention : bool, Optional
        Apply the coil attention. Default is True.
    residual : bool, Optional
        Add the input to the output. Default is True. False gives the plain
        three-layer network.

    Returns
    -------
    numpy.ndarray
        Refined k-space r with the dims of y.

    """

    out, _ = knet_forward_vjp(y, params, attention, residual)

    return out
