#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Dict, Mapping, Optional, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..nn import (
    conv2dt_vjp,
    init_attention,
    init_conv,
    maxpool3d_vjp,
    modrelu_vjp,
    pooled_shape,
    se_attention_vjp,
    upsample3d_vjp,
    zeros_like_params,
)
from ..tensor import OpRecord

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _init_stage(rng, c_out, c_in, k_spatial, k_temporal, n_frames=None, ratio=2):
    stage = {
        "spatial": init_conv(rng, c_out, c_in, (k_spatial, k_spatial)),
        "temporal": init_conv(rng, c_out, c_out, (k_temporal,)),
        "act": np.zeros(c_out),
    }

    if n_frames is not None:
        stage["att"] = init_attention(rng, n_frames, ratio)

    return stage


def init_unet(
    rng: np.random.Generator,
    n_frames: int,
    filters: int = 4,
    k_spatial: int = 3,
    k_temporal: int = 3,
    ratio: int = 2,
) -> Dict[str, dict]:
    r"""Random parameters of the two-stage complex 2D+t UNet.

    Parameters
    ----------
    rng : numpy.random.Generator
        Random generator.
    n_frames : int
        Number of frames, sets the width of the time attention.
    filters : int, Optional
        Base filter count, doubled in the second stage. Default is 4.
    k_spatial : int, Optional
        Spatial kernel extent. Default is 3.
    k_temporal : int, Optional
        Temporal kernel extent. Default is 3.
    ratio : int, Optional
        Attention reduction ratio. Default is 2.

    Returns
    -------
    dict
        Stages "enc0", "enc1", "dec1", "up", "dec0" and "out".

    """

    n_pooled = pooled_shape((n_frames, 1, 1, 1))[0]
    ks = (k_spatial, k_temporal)

    params = {
        "enc0": _init_stage(rng, filters, 1, *ks),
        "enc1": _init_stage(rng, 2 * filters, filters, *ks),
        "dec1": _init_stage(rng, 2 * filters, 2 * filters, *ks, n_pooled, ratio),
        "up": init_conv(rng, filters, 2 * filters, ()),
        "dec0": _init_stage(rng, filters, filters, *ks, n_frames, ratio),
        "out": {
            "spatial": init_conv(rng, 1, filters, (k_spatial, k_spatial), gain=0.1),
            "temporal": init_conv(rng, 1, 1, (k_temporal,), gain=0.1),
        },
    }

    return params


def _stage_vjp(h, stage, attention, trace):
    a, rec_conv = conv2dt_vjp(h, stage["spatial"], stage["temporal"])
    b, rec_act = modrelu_vjp(a, stage["act"], axis=1)
    rec_att = None

    if attention and "att" in stage:
        b, rec_att = se_attention_vjp(b, stage["att"], axis=0)

        if trace is not None:
            trace.append("se_attention.time")

    def pullback(g):
        grads = {}

        if rec_att is not None:
            g, grads["att"] = rec_att.pullback(g)
        elif "att" in stage:
            grads["att"] = zeros_like_params(stage["att"])

        g, grads["act"] = rec_act.pullback(g)
        g, conv_grads = rec_conv.pullback(g)
        grads.update(conv_grads)

        return g, grads

    return b, pullback


def unet_forward_vjp(
    x: NDArray,
    params: Mapping[str, dict],
    attention: bool = True,
    trace: Optional[list] = None,
) -> Tuple[NDArray, OpRecord]:
    r"""unet_forward with its differentiation record. The pullback returns
    (g_x, grads) with grads mirroring params."""

    x = np.asarray(x)

    e0, pb_enc0 = _stage_vjp(x[:, None], params["enc0"], attention, trace)
    pooled, rec_pool = maxpool3d_vjp(e0)
    e1, pb_enc1 = _stage_vjp(pooled, params["enc1"], attention, trace)
    d1, pb_dec1 = _stage_vjp(e1, params["dec1"], attention, trace)
    up, rec_up = upsample3d_vjp(d1, params["up"], out_shape=e0.shape)
    d0, pb_dec0 = _stage_vjp(up + e0, params["dec0"], attention, trace)
    body, rec_out = conv2dt_vjp(d0, params["out"]["spatial"], params["out"]["temporal"])

    out = x + body[:, 0]

    def pullback(g):
        grads = {}
        g_d0, grads["out"] = rec_out.pullback(g[:, None])
        g_skip, grads["dec0"] = pb_dec0(g_d0)
        g_d1, grads["up"] = rec_up.pullback(g_skip)
        g_e1, grads["dec1"] = pb_dec1(g_d1)
        g_pooled, grads["enc1"] = pb_enc1(g_e1)
        (g_e0,) = rec_pool.pullback(g_pooled)
        g_h0, grads["enc0"] = pb_enc0(g_e0 + g_skip)

        return g + g_h0[:, 0], grads

    return out, OpRecord("unet", (out.shape,), pullback)


def unet_forward(
    x: NDArray, params: Mapping[str, dict], attention: bool = True
) -> NDArray:
    r"""Residual complex 2D+t UNet of the image branch.

    Two encoder stages (the second after 3-D max pooling, with doubled
    filters) and two decoder stages (the first on the pooled grid, the second
    after transpose-convolution upsampling and a residual skip from the first
    encoder stage). Every stage is a 2D+t convolution followed by ModReLU;
    decoder stages end with time attention. A linear 2D+t convolution maps
    back to one channel and the input is added.

    Parameters
    ----------
    x : numpy.ndarray
        Cine image (time, x, y).
    params : dict
        Parameters from init_unet.
    attention : bool, Optional
        Apply the time attention. Default is True.

    Returns
    -------
    numpy.ndarray
        Cine image p = x + UNet(x).

    """

    out, _ = unet_forward_vjp(x, params, attention)

    return out
