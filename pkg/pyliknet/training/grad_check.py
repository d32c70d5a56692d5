#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional

# 3rd party imports
import numpy as np
from scipy.special import logit

# Local imports
from .. import consistency, nn, subnets
from ..aliknet import IterationState, NetworkConfig, init_params
from ..errors import ConfigurationError
from ..mri import EncodingOperator, generate_coil_maps, generate_mask
from ..tensor import directional_derivative, make_rng, tree_inner, tree_map
from .loss import loss_vjp
from .objective import objective_vjp

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


@dataclass
class GradCheckReport:
    r"""Maximum relative error between analytic and finite-difference
    directional derivatives, per parameter group."""

    errors: Dict[str, float] = field(default_factory=dict)
    tolerances: Dict[str, float] = field(default_factory=dict)

    @property
    def max_error(self) -> float:
        return max(self.errors.values(), default=0.0)

    @property
    def failures(self) -> Dict[str, float]:
        return {k: v for k, v in self.errors.items() if v > self.tolerances[k]}

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "max_error": self.max_error,
            "errors": dict(self.errors),
            "tolerances": dict(self.tolerances),
        }


@dataclass
class _Case:
    inputs: dict
    fun: Callable
    grad: Callable
    step: float = 1e-6
    tolerance: float = 1e-6
    exclude: tuple = ()


def _random_like(rng, a):
    a = np.asarray(a)
    out = np.asarray(rng.standard_normal(a.shape))

    if np.iscomplexobj(a):
        out = out + 1j * np.asarray(rng.standard_normal(a.shape))

    return out.astype(a.dtype)


def _crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _operator(rng, n_t, n_x, n_y, n_c):
    maps = generate_coil_maps(n_c, n_x, n_y).data
    mask = generate_mask(n_t, n_y, 2.0, rng=rng).data

    return EncodingOperator(maps, mask)


def _vjp_case(vjp, names, inputs, **kwargs):
    def fun(inp):
        return vjp(*(inp[n] for n in names))[0]

    def grad(inp, cot):
        _, record = vjp(*(inp[n] for n in names))
        return dict(zip(names, record.pullback(*cot)))

    return _Case(inputs, fun, grad, **kwargs)


def _case_convnd(rng):
    inputs = {"x": _crandn(rng, 2, 2, 5, 5), "kernel": _crandn(rng, 3, 2, 3, 3), "bias": _crandn(rng, 3)}
    return _vjp_case(nn.convnd_vjp, ("x", "kernel", "bias"), inputs, step=1.0, tolerance=1e-10)


def _case_conv2dt(rng):
    inputs = {
        "x": _crandn(rng, 4, 2, 5, 5),
        "w": {
            "spatial": nn.init_conv(rng, 3, 2, (3, 3)),
            "temporal": nn.init_conv(rng, 3, 3, (3,)),
        },
    }
    inputs["w"]["spatial"]["bias"] = _crandn(rng, 3)

    def fun(inp):
        return nn.conv2dt(inp["x"], inp["w"]["spatial"], inp["w"]["temporal"])

    def grad(inp, cot):
        _, record = nn.conv2dt_vjp(inp["x"], inp["w"]["spatial"], inp["w"]["temporal"])
        g_x, g_w = record.pullback(*cot)
        return {"x": g_x, "w": g_w}

    return _Case(inputs, fun, grad, step=1.0, tolerance=1e-10)


def _case_modrelu(rng):
    inputs = {"z": _crandn(rng, 2, 3, 4, 4), "bias": 0.5 * rng.standard_normal(3)}
    return _vjp_case(nn.modrelu_vjp, ("z", "bias"), inputs)


def _case_maxpool3d(rng):
    return _vjp_case(nn.maxpool3d_vjp, ("x",), {"x": _crandn(rng, 3, 2, 5, 5)})


def _case_upsample3d(rng):
    inputs = {"x": _crandn(rng, 2, 3, 3, 3), "w": nn.init_conv(rng, 2, 3, ())}
    inputs["w"]["bias"] = _crandn(rng, 2)

    def fun(inp):
        return nn.upsample3d(inp["x"], inp["w"], out_shape=(3, 2, 5, 6))

    def grad(inp, cot):
        _, record = nn.upsample3d_vjp(inp["x"], inp["w"], out_shape=(3, 2, 5, 6))
        g_x, g_w = record.pullback(*cot)
        return {"x": g_x, "w": g_w}

    return _Case(inputs, fun, grad, step=1.0, tolerance=1e-10)


def _case_se_attention(rng):
    weights = nn.init_attention(rng, 2)
    weights = tree_map(lambda a: a + 0.1 * rng.standard_normal(a.shape), weights)
    inputs = {"x": _crandn(rng, 2, 2, 2, 2), "w": weights}

    def fun(inp):
        return nn.se_attention(inp["x"], inp["w"], axis=0)

    def grad(inp, cot):
        _, record = nn.se_attention_vjp(inp["x"], inp["w"], axis=0)
        g_x, g_w = record.pullback(*cot)
        return {"x": g_x, "w": g_w}

    return _Case(inputs, fun, grad)


def _case_unet(rng):
    params = subnets.init_unet(rng, 4, filters=2)
    params = tree_map(lambda a: a + 0.05 * _random_like(rng, a), params)
    inputs = {"x": _crandn(rng, 4, 8, 8), "params": params}

    def fun(inp):
        return subnets.unet_forward(inp["x"], inp["params"])

    def grad(inp, cot):
        _, record = subnets.unet_forward_vjp(inp["x"], inp["params"])
        g_x, g_p = record.pullback(*cot)
        return {"x": g_x, "params": g_p}

    return _Case(inputs, fun, grad, tolerance=1e-5)


def _case_lowrank(rng):
    spec = (2, 2, 2)
    tau = np.full(8, -0.5)

    def fun(inp):
        return subnets.lowrank_forward(inp["x"], {"tau": tau}, spec)

    def grad(inp, cot):
        _, record = subnets.lowrank_forward_vjp(inp["x"], {"tau": tau}, spec)
        return {"x": record.pullback(*cot)[0]}

    return _Case({"x": _crandn(rng, 4, 8, 8)}, fun, grad, tolerance=1e-5)


def _case_svt_tau(rng):
    patch = _crandn(rng, 4, 3, 2)
    sigma = np.linalg.svd(patch.reshape(4, -1).T, compute_uv=False)
    # place the threshold within a few surrogate widths of the second value
    zeta = sigma[1] + 0.005 * sigma[0]
    inputs = {"tau": np.array(logit(zeta / sigma[0]))}

    def fun(inp):
        return subnets.svt_patch_surrogate(patch, float(inp["tau"]))

    def grad(inp, cot):
        return {"tau": np.array(subnets.svt_backward(patch, float(inp["tau"]), cot[0])[1])}

    return _Case(inputs, fun, grad, tolerance=1e-4)


def _case_knet(rng):
    params = subnets.init_knet(rng, 2, filters=2)
    params = tree_map(lambda a: a + 0.05 * _random_like(rng, a), params)
    inputs = {"y": _crandn(rng, 2, 2, 4, 4), "params": params}

    def fun(inp):
        return subnets.knet_forward(inp["y"], inp["params"])

    def grad(inp, cot):
        _, record = subnets.knet_forward_vjp(inp["y"], inp["params"])
        g_y, g_p = record.pullback(*cot)
        return {"y": g_y, "params": g_p}

    return _Case(inputs, fun, grad, tolerance=1e-5)


def _case_image_dc(rng):
    op = _operator(rng, 4, 8, 8, 2)
    y_u = op.forward(_crandn(rng, 4, 8, 8))
    inputs = {
        "p": _crandn(rng, 4, 8, 8),
        "q": _crandn(rng, 4, 8, 8),
        "params": {"eta": np.array(0.8), "alpha": np.array(0.3)},
    }

    def fun(inp):
        return consistency.image_dc(inp["p"], inp["q"], y_u, op, inp["params"])

    def grad(inp, cot):
        _, record = consistency.image_dc_vjp(inp["p"], inp["q"], y_u, op, inp["params"])
        g_p, g_q, _, g_params = record.pullback(*cot)
        return {"p": g_p, "q": g_q, "params": g_params}

    return _Case(inputs, fun, grad)


def _case_kspace_dc(rng):
    mask = generate_mask(4, 8, 2.0, rng=rng).data
    y_u = _crandn(rng, 4, 2, 8, 8) * mask[:, None, None, :]
    inputs = {"r": _crandn(rng, 4, 2, 8, 8), "params": {"mu": np.array(0.3)}}

    def fun(inp):
        return consistency.kspace_dc(inp["r"], y_u, mask, inp["params"])

    def grad(inp, cot):
        _, record = consistency.kspace_dc_vjp(inp["r"], y_u, mask, inp["params"])
        g_r, _, g_params = record.pullback(*cot)
        return {"r": g_r, "params": g_params}

    return _Case(inputs, fun, grad)


def _case_isl(rng):
    op = _operator(rng, 4, 8, 8, 2)
    inputs = {
        "x": _crandn(rng, 4, 8, 8),
        "y": _crandn(rng, 4, 2, 8, 8),
        "params": {"a": np.array(0.2), "b": np.array(-0.4)},
    }

    def fun(inp):
        return consistency.isl(inp["x"], inp["y"], op, inp["params"])

    def grad(inp, cot):
        _, record = consistency.isl_vjp(inp["x"], inp["y"], op, inp["params"])
        g_x, g_y, g_params = record.pullback(*cot)
        return {"x": g_x, "y": g_y, "params": g_params}

    return _Case(inputs, fun, grad)


def _case_loss(rng):
    ref_x, ref_y = _crandn(rng, 4, 8, 8), _crandn(rng, 4, 2, 8, 8)
    inputs = {"x_hat": _crandn(rng, 4, 8, 8), "y_hat": _crandn(rng, 4, 2, 8, 8)}

    def fun(inp):
        report, _ = loss_vjp(inp["x_hat"], inp["y_hat"], ref_x, ref_y)
        return np.array(report.total)

    def grad(inp, cot):
        _, pullback = loss_vjp(inp["x_hat"], inp["y_hat"], ref_x, ref_y)
        g_x, g_y = pullback()
        return {"x_hat": cot[0] * g_x, "y_hat": cot[0] * g_y}

    return _Case(inputs, fun, grad)


def _case_network(rng, config: Optional[NetworkConfig] = None):
    if config is None:
        config = NetworkConfig(
            n_iter=1, n_frames=4, n_x=8, n_y=8, n_coils=2, filters=2, kspace_filters=2
        )

    n_t, n_x, n_y, n_c = config.dims
    op = _operator(rng, n_t, n_x, n_y, n_c)
    ref_x = _crandn(rng, n_t, n_x, n_y)
    ref_y = op.coil_expand(ref_x)
    y_u = ref_y * op.mask[:, None, None, :]

    params = init_params(config, rng=rng)
    params = tree_map(lambda a: a + 0.05 * _random_like(rng, a), params)

    # dense y0 keeps every k-space pre-activation away from the ModReLU kink at 0
    unsampled = 1.0 - op.mask[:, None, None, :]
    y0 = y_u + 0.1 * _crandn(rng, *y_u.shape) * unsampled
    inputs = {"x0": op.adjoint(y_u), "y0": y0}
    blocks = {}

    for n, iteration in enumerate(params):
        for block, values in iteration.items():
            inputs[f"iter{n}.{block}"] = values
            blocks[f"iter{n}.{block}"] = (n, block)

    def _unpack(inp):
        unpacked = [dict() for _ in params]

        for key, (n, block) in blocks.items():
            unpacked[n][block] = inp[key]

        state = IterationState(x=inp["x0"], y=inp["y0"], op=op, y_u=y_u)

        return state, unpacked

    def fun(inp):
        state, unpacked = _unpack(inp)
        report, _, _ = objective_vjp(state, unpacked, config, ref_x, ref_y)
        return np.array(report.total)

    def grad(inp, cot):
        state, unpacked = _unpack(inp)
        _, _, pullback = objective_vjp(state, unpacked, config, ref_x, ref_y)
        g_x, g_y, grads = pullback()
        out = {"x0": cot[0] * g_x, "y0": cot[0] * g_y}

        for key, (n, block) in blocks.items():
            out[key] = tree_map(lambda g: cot[0] * g, grads[n][block])

        return out

    # hard thresholds give tau a zero derivative; tau is checked by svt_tau
    return _Case(inputs, fun, grad, tolerance=1e-5, exclude=("tau",))


CASES = {
    "convnd": _case_convnd,
    "conv2dt": _case_conv2dt,
    "modrelu": _case_modrelu,
    "maxpool3d": _case_maxpool3d,
    "upsample3d": _case_upsample3d,
    "se_attention": _case_se_attention,
    "unet": _case_unet,
    "lowrank": _case_lowrank,
    "svt_tau": _case_svt_tau,
    "knet": _case_knet,
    "image_dc": _case_image_dc,
    "kspace_dc": _case_kspace_dc,
    "isl": _case_isl,
    "loss": _case_loss,
    "network": _case_network,
}


def _direction(rng, tree, exclude):
    if isinstance(tree, dict):
        return {
            k: tree_map(np.zeros_like, v) if k in exclude else _direction(rng, v, exclude)
            for k, v in tree.items()
        }

    return tree_map(lambda a: _random_like(rng, a), tree)


def _relative_error(analytic, numeric, floor=1e-12):
    return abs(analytic - numeric) / max(abs(analytic), abs(numeric), floor)


def _check_case(case: _Case, rng, n_directions, step, prefix, report):
    out = case.fun(case.inputs)
    outs = out if isinstance(out, tuple) else (out,)
    cot = tuple(_random_like(rng, o) for o in outs)

    def directional_loss(inputs):
        values = case.fun(inputs)
        values = values if isinstance(values, tuple) else (values,)
        return tree_inner(list(cot), list(values))

    grads = case.grad(case.inputs, cot)
    h = case.step if step is None else step

    for group, value in case.inputs.items():
        worst = 0.0

        for _ in range(n_directions):
            direction = _direction(rng, value, case.exclude)
            analytic = tree_inner(grads[group], direction)
            numeric = directional_derivative(
                lambda t, g=group: directional_loss({**case.inputs, g: t}), value, direction, h
            )
            worst = max(worst, _relative_error(analytic, numeric))

        report.errors[f"{prefix}{group}"] = worst
        report.tolerances[f"{prefix}{group}"] = case.tolerance


def grad_check(
    component: str = "all",
    seed: int = 0,
    n_directions: int = 3,
    step: Optional[float] = None,
    config: Optional[NetworkConfig] = None,
) -> GradCheckReport:
    r"""Compares every backward pass with central finite differences of the
    real test loss Re <c, f(inputs)> along random directions.

    Linear operations are differentiated with a unit step, exact for them;
    the others with a step of 1e-6. The threshold coefficients of the
    low-rank layer are checked against the smoothed surrogate forward.

    Parameters
    ----------
    component : str, Optional
        One of the keys of CASES, or "all". Default is "all".
    seed : int, Optional
        Seed of the random directions. Default is 0.
    n_directions : int, Optional
        Random directions per parameter group. Default is 3.
    step : float, Optional
        Overrides the finite-difference step.
    config : NetworkConfig, Optional
        Network checked by the "network" component. Default is a one-iteration
        A-LIKNet on 4 frames of 8x8 pixels with 2 coils.

    Returns
    -------
    GradCheckReport
        Maximum relative error per group, keyed "component.group".

    Raises
    ------
    ConfigurationError
        If the component is unknown.

    """

    if component != "all" and component not in CASES:
        raise ConfigurationError(
            f"unknown grad-check component {component}, expected one of {list(CASES)}"
        )

    names = list(CASES) if component == "all" else [component]
    report = GradCheckReport()

    for name in names:
        rng = make_rng(seed)
        case = CASES[name](rng, config) if name == "network" else CASES[name](rng)
        _check_case(case, rng, n_directions, step, f"{name}.", report)
        worst = max(v for k, v in report.errors.items() if k.startswith(f"{name}."))
        logging.info("grad check %s: max relative error %.3e", name, worst)

    return report
