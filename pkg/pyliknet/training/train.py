#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import logging
import os
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

# 3rd party imports
import numpy as np
import pandas as pd
import tqdm
import xarray as xr

# Local imports
from ..aliknet import NetworkConfig, final_image, forward, init_params, init_state
from ..errors import ConfigurationError, NumericError
from ..io.checkpoint import save_checkpoint
from ..metrics import evaluate
from ..mri import make_sample
from ..tensor import make_rng, tree_leaves, tree_map
from .adam import OptimState, adam_init, adam_step
from .objective import objective_vjp
from .train_config import TrainConfig

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

logging.captureWarnings(True)
logging.basicConfig(
    format="[%(asctime)s] %(levelname)s: %(message)s",
    datefmt="%d-%b-%y %H:%M:%S",
    level=logging.INFO,
)


@dataclass
class TrainResult:
    r"""Outcome of a training run."""

    params: list
    opt: OptimState
    log: pd.DataFrame
    report: dict = field(default_factory=dict)


def cast_params(params, dtype):
    r"""Casts complex leaves to dtype and real leaves to the matching real
    precision."""
    real = np.finfo(dtype).dtype

    return tree_map(
        lambda a: np.asarray(a).astype(dtype if np.iscomplexobj(a) else real), params
    )


def _param_norms(params) -> dict:
    return {path: float(np.linalg.norm(np.ravel(leaf))) for path, leaf in tree_leaves(params)}


def _mean_grads(grads: List[list]):
    if len(grads) == 1:
        return grads[0]

    return tree_map(lambda *g: sum(g) / len(g), *grads)


def validate(
    params, network: NetworkConfig, samples: Sequence[xr.Dataset], dtype=np.complex128
) -> dict:
    r"""Mean metrics of the reconstruction and of the zero-filled input over
    validation samples.

    Parameters
    ----------
    params : list of dict
        Parameters.
    network : NetworkConfig
        Network configuration.
    samples : list of xarray.Dataset
        Validation samples.
    dtype : numpy.dtype, Optional
        Working precision. Default is complex128.

    Returns
    -------
    dict
        {"recon": {"nrmse", "psnr_db", "ssim"}, "zero_filled": {...}}.

    """

    if not samples:
        return {}

    rows = {"recon": [], "zero_filled": []}

    for sample in samples:
        state = init_state(sample, dtype)
        out = forward(state, params, network)
        ref = sample.reference.data

        for name, image in (("recon", final_image(out, network)), ("zero_filled", state.x)):
            report = evaluate(image, ref)
            rows[name].append([report.nrmse, report.psnr, report.ssim])

    return {
        name: dict(zip(("nrmse", "psnr_db", "ssim"), np.mean(values, axis=0).tolist()))
        for name, values in rows.items()
    }


def train(
    dataset: Sequence[xr.Dataset],
    config: Optional[TrainConfig] = None,
    network: Optional[NetworkConfig] = None,
    params: Optional[list] = None,
    out_dir: Optional[str] = None,
    validation: Optional[Sequence[xr.Dataset]] = None,
    progress: bool = True,
) -> TrainResult:
    r"""Trains the unrolled network with Adam.

    Every step draws an acceleration uniformly from the configured range and
    undersamples each reference of the batch with a fresh mask, so one
    network covers the whole range.

    Parameters
    ----------
    dataset : list of xarray.Dataset
        Training samples; only their references and coil maps are used.
    config : TrainConfig, Optional
        Training hyperparameters. Default is TrainConfig().
    network : NetworkConfig, Optional
        Network configuration. Default matches the dims of the dataset.
    params : list of dict, Optional
        Initial parameters. Default is init_params(network, config.seed).
    out_dir : str, Optional
        Directory of the checkpoints and of the loss log.
    validation : list of xarray.Dataset, Optional
        Samples evaluated after training.
    progress : bool, Optional
        Display a progress bar. Default is True.

    Returns
    -------
    TrainResult
        Final parameters, optimizer state, loss log (one row per step with
        the moving average l_total_avg) and final report.

    Raises
    ------
    ConfigurationError
        If the dataset is empty or does not match the network.
    NumericError
        If the loss becomes non-finite. The message names the step and the
        error carries the parameter norms.

    """

    if not dataset:
        raise ConfigurationError("the training dataset is empty")

    config = config or TrainConfig()
    n_t, n_x, n_y = dataset[0].reference.shape
    n_c = dataset[0].maps.shape[0]

    if network is None:
        network = NetworkConfig(n_frames=n_t, n_x=n_x, n_y=n_y, n_coils=n_c)
    elif network.dims != (n_t, n_x, n_y, n_c):
        raise ConfigurationError(
            f"dataset dims {(n_t, n_x, n_y, n_c)} differ from network dims {network.dims}"
        )

    if config.r_range[1] > n_y:
        raise ConfigurationError(
            f"acceleration range {config.r_range} infeasible for {n_y} lines"
        )

    dtype = config.dtype
    rng = make_rng(config.seed)

    if params is None:
        params = init_params(network, seed=config.seed)

    params = cast_params(params, dtype)
    opt = adam_init(params, lr=config.lr)
    n_steps = config.n_steps(len(dataset))
    rows = []

    logging.info(
        "Training %s for %d steps (batch %d, R in %s)",
        network.variant,
        n_steps,
        config.batch_size,
        config.r_range,
    )

    for step in tqdm.tqdm(range(n_steps), ncols=60, disable=not progress):
        grads, reports, accelerations = [], [], []

        for b in range(config.batch_size):
            sample = dataset[(step * config.batch_size + b) % len(dataset)]
            acceleration = rng.uniform(*config.r_range)
            sample = make_sample(
                sample.reference, sample.maps, acceleration, config.center_lines, rng
            )

            report, _, pullback = objective_vjp(
                init_state(sample, dtype),
                params,
                network,
                sample.reference.data.astype(dtype),
                sample.full_kspace.data.astype(dtype),
                config.loss_normalization,
            )

            if not np.isfinite(report.total):
                norms = _param_norms(params)
                logging.error("Non-finite loss at step %d", step)
                raise NumericError(f"non-finite loss at step {step}", step, norms)

            grads.append(pullback()[2])
            reports.append(report)
            accelerations.append(acceleration)

        params, opt = adam_step(params, _mean_grads(grads), opt)

        rows.append(
            {
                "step": step,
                "acceleration": float(np.mean(accelerations)),
                "l_image": float(np.mean([r.l_image for r in reports])),
                "l_kspace": float(np.mean([r.l_kspace for r in reports])),
                "l_total": float(np.mean([r.total for r in reports])),
            }
        )

        if config.log_every and step % config.log_every == 0:
            logging.info("step %d: loss %.6f", step, rows[-1]["l_total"])

        if out_dir and config.checkpoint_every and (step + 1) % config.checkpoint_every == 0:
            path = os.path.join(out_dir, f"step_{step + 1:06d}")
            save_checkpoint(path, params, network, step + 1, opt, config.to_dict())
            logging.info("Checkpoint written to %s", path)

    log = pd.DataFrame(rows, columns=["step", "acceleration", "l_image", "l_kspace", "l_total"])
    log = log.set_index("step")
    log["l_total_avg"] = log["l_total"].rolling(config.average_window, min_periods=1).mean()

    report = {
        "steps": n_steps,
        "final_loss_avg": float(log["l_total_avg"].iloc[-1]) if n_steps else float("nan"),
        "validation": validate(params, network, validation or [], dtype),
        "network": network.to_dict(),
        "training": config.to_dict(),
    }

    if report["validation"]:
        logging.info(
            "Validation PSNR %.3f dB (zero-filled %.3f dB)",
            report["validation"]["recon"]["psnr_db"],
            report["validation"]["zero_filled"]["psnr_db"],
        )

    if out_dir:
        path = os.path.join(out_dir, "final")
        save_checkpoint(path, params, network, n_steps, opt, config.to_dict())
        log.to_csv(os.path.join(out_dir, "loss_log.csv"))
        logging.info("Final checkpoint written to %s", path)

    return TrainResult(params, opt, log, report)
