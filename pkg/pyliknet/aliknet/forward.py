#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Callable, List, Sequence, Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray

# Local imports
from ..consistency import image_dc_vjp, isl_vjp, kspace_dc_vjp
from ..errors import ConfigurationError
from ..subnets import knet_forward_vjp, lowrank_forward_vjp, unet_forward_vjp
from .iteration_state import IterationState
from .network_config import NetworkConfig

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

_BLOCKS = {
    "knet": "enable_kspace_branch",
    "kdc": "enable_kspace_branch",
    "unet": "enable_image_net",
    "lowrank": "enable_lowrank",
    "idc": "image_branch",
    "isl": "enable_isl",
}


def _check_params(params, config):
    config.validate()

    if len(params) != config.n_iter:
        raise ConfigurationError(
            f"{len(params)} parameter sets for {config.n_iter} iterations"
        )

    for n, iteration in enumerate(params):
        for block, toggle in _BLOCKS.items():
            if getattr(config, toggle) and block not in iteration:
                raise ConfigurationError(f"iteration {n} has no {block} parameters")


def forward_vjp(
    state: IterationState,
    params: Sequence[dict],
    config: NetworkConfig,
    trace: bool = False,
) -> Tuple[IterationState, Callable]:
    r"""Unrolled forward pass with its pullback.

    Returns
    -------
    state : IterationState
        Final state.
    pullback : callable
        Maps the cotangents (g_x, g_y) of the final image and k-space to
        (g_x0, g_y0, grads), grads being one dict per iteration mirroring
        params.

    See Also
    --------
    pyliknet.aliknet.forward

    """

    _check_params(params, config)

    op, y_u = state.op, state.y_u
    x, y = state.x, state.y
    p, q, r = state.p, state.q, state.r
    log = list(state.trace) if trace else None
    records: List[dict] = []

    def _log(name):
        if log is not None:
            log.append(name)

    for iteration in params:
        rec = {}

        if config.enable_kspace_branch:
            r, rec["knet"] = knet_forward_vjp(
                y,
                iteration["knet"],
                config.enable_attention,
                config.kspace_residual,
                log,
            )
            _log("knet")
            y, rec["kdc"] = kspace_dc_vjp(r, y_u, op.mask, iteration["kdc"])
            _log("kspace_dc")

        if config.image_branch:
            if config.enable_image_net:
                p, rec["unet"] = unet_forward_vjp(
                    x, iteration["unet"], config.enable_attention, log
                )
                _log("unet")

            if config.enable_lowrank:
                q, rec["lowrank"] = lowrank_forward_vjp(
                    x, iteration["lowrank"], config.patch_spec, config.svt_mode
                )
                _log("lowrank")

            if not config.enable_image_net:
                p = q
            elif not config.enable_lowrank:
                q = p

            x, rec["idc"] = image_dc_vjp(p, q, y_u, op, iteration["idc"])
            _log("image_dc")

        if config.enable_isl:
            (x, y), rec["isl"] = isl_vjp(x, y, op, iteration["isl"])
            _log("isl")

        records.append(rec)

    out = IterationState(x, y, op, y_u, p, q, r, trace=log if log is not None else [])

    def pullback(g_x: NDArray, g_y: NDArray):
        grads = [None] * len(records)

        for n in reversed(range(len(records))):
            rec, it_grads = records[n], {}

            if "isl" in rec:
                g_x, g_y, it_grads["isl"] = rec["isl"].pullback(g_x, g_y)

            if "idc" in rec:
                g_p, g_q, _, it_grads["idc"] = rec["idc"].pullback(g_x)
                g_x = np.zeros_like(g_x)

                if "unet" not in rec:
                    g_q = g_q + g_p
                elif "lowrank" not in rec:
                    g_p = g_p + g_q

                if "unet" in rec:
                    g_in, it_grads["unet"] = rec["unet"].pullback(g_p)
                    g_x = g_x + g_in

                if "lowrank" in rec:
                    g_in, it_grads["lowrank"] = rec["lowrank"].pullback(g_q)
                    g_x = g_x + g_in

            if "kdc" in rec:
                g_r, _, it_grads["kdc"] = rec["kdc"].pullback(g_y)
                g_y, it_grads["knet"] = rec["knet"].pullback(g_r)

            grads[n] = it_grads

        return g_x, g_y, grads

    return out, pullback


def forward(
    state: IterationState,
    params: Sequence[dict],
    config: NetworkConfig,
    trace: bool = False,
) -> IterationState:
    r"""Runs the unrolled network.

    Every iteration runs the k-space branch (k-space network then k-space
    data consistency), the image branch (UNet and low-rank layer on the
    same input, then image data consistency) and the information sharing
    layer. Disabled blocks pass their input through; with the low-rank
    layer disabled the image data consistency gets q = p, with the UNet
    disabled p = q.

    Parameters
    ----------
    state : IterationState
        Initial state from init_state.
    params : list of dict
        One parameter dict per iteration, from init_params.
    config : NetworkConfig
        Network configuration.
    trace : bool, Optional
        Record the executed blocks in state.trace. Default is False.

    Returns
    -------
    IterationState
        Final state.

    Raises
    ------
    ConfigurationError
        If params do not match the configuration. Raised before any compute.

    """

    out, _ = forward_vjp(state, params, config, trace)

    return out


def final_image(state: IterationState, config: NetworkConfig) -> NDArray:
    r"""Reconstructed image of a final state. Without image branch the
    k-space is coil-combined."""

    if config.image_branch:
        return state.x

    return state.op.coil_combine(state.y)
