#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import json
import logging
import os
import sys
from argparse import ArgumentParser
from typing import Optional, Sequence

# 3rd party imports
import numpy as np

# Local imports
from .aliknet import final_image, forward, init_state
from .errors import ConfigurationError, NumericError, ShapeError
from .io import (
    error_map,
    load_checkpoint,
    load_run_config,
    load_sample,
    read_tensor,
    save_sample,
    write_pgm,
    write_tensor,
)
from .metrics import evaluate
from .mri import generate_mask, make_dataset
from .tensor import make_rng
from .training import grad_check, train

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


def _write_json(path: Optional[str], document: dict):
    text = json.dumps(document, indent=2)

    if path is None:
        print(text)
        return

    with open(path, "w", encoding="utf-8") as file:
        file.write(text + "\n")


def _phantom(args):
    samples = make_dataset(
        args.count,
        dims=args.dims,
        r_range=args.r_range,
        seed=args.seed,
        progress=args.count > 1,
    )

    for i, sample in enumerate(samples):
        save_sample(os.path.join(args.out, f"sample_{i:04d}"), sample)

    logging.info("%d samples written to %s", len(samples), args.out)


def _mask(args):
    mask = generate_mask(
        args.frames, args.lines, args.acceleration, args.center_lines, make_rng(args.seed)
    )
    write_tensor(args.out, mask.data)
    logging.info(
        "Mask with acceleration %.3f written to %s", mask.attrs["acceleration"], args.out
    )


def _train(args):
    run = load_run_config(args.config)
    network = run.network_config()
    config = run.train_config()
    out_dir = args.out or run.paths["out"]
    dims = network.dims

    dataset = make_dataset(
        run.samples,
        dims=dims,
        r_range=config.r_range,
        seed=config.seed,
        center_lines=config.center_lines,
    )
    accel = run.validation_acceleration
    validation = make_dataset(
        run.validation_samples,
        dims=dims,
        r_range=(accel, accel),
        seed=config.seed + run.samples,
        center_lines=config.center_lines,
    )

    for i, sample in enumerate(validation):
        save_sample(os.path.join(out_dir, "validation", f"sample_{i:04d}"), sample)

    result = train(dataset, config, network, out_dir=out_dir, validation=validation)
    result.report["run"] = run.to_dict()
    _write_json(os.path.join(out_dir, "report.json"), result.report)


def _recon(args):
    checkpoint = load_checkpoint(args.checkpoint)
    network = checkpoint["network"]
    sample = load_sample(args.sample)

    if sample.reference.shape != network.dims[:3] or sample.maps.shape[0] != network.n_coils:
        raise ShapeError(
            "sample does not match the checkpoint network",
            sample.under_kspace.shape,
            network.dims,
        )

    state = init_state(sample)
    out = forward(state, checkpoint["params"], network)

    os.makedirs(args.out, exist_ok=True)
    write_tensor(os.path.join(args.out, "image.ctns"), final_image(out, network))
    write_tensor(os.path.join(args.out, "kspace.ctns"), out.y)
    write_tensor(os.path.join(args.out, "zero_filled.ctns"), state.x)
    logging.info("Reconstruction written to %s", args.out)


def _eval(args):
    pred = read_tensor(args.pred)
    ref = read_tensor(args.ref)

    if pred.shape != ref.shape:
        raise ShapeError("prediction and reference differ", pred.shape, ref.shape)

    report = evaluate(pred, ref)
    _write_json(args.out, report.to_dict({"pred": args.pred, "ref": args.ref}))


def _gradcheck(args):
    report = grad_check(args.component, seed=args.seed)
    _write_json(args.out, report.to_dict())

    if not report.passed:
        raise NumericError(f"gradient check failed for {sorted(report.failures)}")


def _frame(tensor, frame):
    if tensor.ndim == 3:
        if not 0 <= frame < tensor.shape[0]:
            raise ConfigurationError(f"frame {frame} not in [0, {tensor.shape[0]})")

        tensor = tensor[frame]
    elif tensor.ndim != 2:
        raise ShapeError("figure input must be (time, x, y) or (x, y)", tensor.shape)

    return tensor


def _figure(args):
    image = _frame(read_tensor(args.image), args.frame)
    write_pgm(args.out, np.abs(image))

    ref = None

    if args.ref:
        ref = _frame(read_tensor(args.ref), args.frame)
        stem, _ = os.path.splitext(args.out)
        write_pgm(f"{stem}_error.pgm", error_map(image, ref))

    if args.png:
        # 3rd party imports
        import matplotlib

        matplotlib.use("Agg")

        # 3rd party imports
        import matplotlib.pyplot as plt

        # Local imports
        from .plot import plot_reconstruction

        if ref is None:
            ref = image

        axs = plot_reconstruction(None, image, ref)
        axs[0].figure.savefig(args.png, dpi=150, bbox_inches="tight")
        plt.close(axs[0].figure)


def build_parser() -> ArgumentParser:
    r"""Argument parser of the pyliknet command."""

    parser = ArgumentParser(
        prog="pyliknet",
        description="Unrolled low-rank and k-space/image reconstruction of cine MRI",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    cmd = commands.add_parser("phantom", help="write phantom CineSample directories")
    cmd.add_argument("--out", required=True, help="output directory")
    cmd.add_argument("--count", default=1, type=int, help="number of samples")
    cmd.add_argument(
        "--dims", default=(8, 32, 32, 4), type=int, nargs=4, metavar=("T", "X", "Y", "C")
    )
    cmd.add_argument("--r-range", default=(2.0, 8.0), type=float, nargs=2, metavar=("LO", "HI"))
    cmd.add_argument("--seed", default=0, type=int, help="seed for random generator")
    cmd.set_defaults(func=_phantom)

    cmd = commands.add_parser("mask", help="write a sampling mask")
    cmd.add_argument("--out", required=True, help="output tensor file")
    cmd.add_argument("--frames", required=True, type=int, help="number of frames")
    cmd.add_argument("--lines", required=True, type=int, help="number of ky lines")
    cmd.add_argument("--acceleration", required=True, type=float, help="acceleration factor")
    cmd.add_argument("--center-lines", default=None, type=int, help="fully sampled center lines")
    cmd.add_argument("--seed", default=0, type=int, help="seed for random generator")
    cmd.set_defaults(func=_mask)

    cmd = commands.add_parser("train", help="train a network from a run configuration")
    cmd.add_argument("--config", default=None, help="JSON run configuration")
    cmd.add_argument("--out", default=None, help="output directory")
    cmd.set_defaults(func=_train)

    cmd = commands.add_parser("recon", help="reconstruct a sample with a checkpoint")
    cmd.add_argument("--checkpoint", required=True, help="checkpoint directory")
    cmd.add_argument("--sample", required=True, help="sample directory")
    cmd.add_argument("--out", required=True, help="output directory")
    cmd.set_defaults(func=_recon)

    cmd = commands.add_parser("eval", help="compute image quality metrics")
    cmd.add_argument("--pred", required=True, help="reconstructed image tensor file")
    cmd.add_argument("--ref", required=True, help="reference image tensor file")
    cmd.add_argument("--out", default=None, help="JSON report, default prints")
    cmd.set_defaults(func=_eval)

    cmd = commands.add_parser("gradcheck", help="finite-difference gradient checks")
    cmd.add_argument("--component", default="all", help="component name or all")
    cmd.add_argument("--seed", default=0, type=int, help="seed of the random directions")
    cmd.add_argument("--out", default=None, help="JSON report, default prints")
    cmd.set_defaults(func=_gradcheck)

    cmd = commands.add_parser("figure", help="write magnitude and error map graymaps")
    cmd.add_argument("--image", required=True, help="image tensor file")
    cmd.add_argument("--out", required=True, help="output PGM file")
    cmd.add_argument("--ref", default=None, help="reference image for the error map")
    cmd.add_argument("--frame", default=0, type=int, help="frame index")
    cmd.add_argument("--png", default=None, help="also write a PNG panel figure")
    cmd.set_defaults(func=_figure)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    r"""Runs the pyliknet command.

    Parameters
    ----------
    argv : list of str, Optional
        Arguments. Default is sys.argv[1:].

    Returns
    -------
    int
        Exit status, 0 on success. On failure a single line
        "error: <category>: <message>" is written to stderr.

    """

    args = build_parser().parse_args(argv)

    try:
        args.func(args)
    except OSError as error:
        print(f"error: io: {error}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as error:
        category = getattr(error, "category", "value")
        message = str(error).replace("\n", " ")
        print(f"error: {category}: {message}", file=sys.stderr)
        return 1

    return 0
