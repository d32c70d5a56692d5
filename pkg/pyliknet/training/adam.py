#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from dataclasses import dataclass, replace
from typing import Tuple

# 3rd party imports
import numpy as np

# Local imports
from ..tensor import tree_map

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


@dataclass(frozen=True)
class OptimState:
    r"""Adam accumulators, mirroring the parameter tree."""

    m: list
    v: list
    step: int = 0
    lr: float = 1e-4
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8


def _componentwise(fun, *arrays):
    # real and imaginary parts are independent scalars
    if np.iscomplexobj(arrays[0]):
        real = fun(*(np.real(a) for a in arrays))
        imag = fun(*(np.imag(a) for a in arrays))
        return (real + 1j * imag).astype(arrays[0].dtype)

    return fun(*arrays)


def adam_init(params, lr: float = 1e-4, **kwargs) -> OptimState:
    r"""Zero Adam state for a parameter tree.

    Parameters
    ----------
    params : list of dict
        Parameters.
    lr : float, Optional
        Learning rate. Default is 1e-4.
    **kwargs
        beta1, beta2, eps.

    Returns
    -------
    OptimState
        Initial state.

    """

    zeros = tree_map(np.zeros_like, params)

    return OptimState(m=zeros, v=tree_map(np.zeros_like, params), lr=lr, **kwargs)


def adam_step(params, grads, opt: OptimState) -> Tuple[list, OptimState]:
    r"""One bias-corrected Adam update. Complex parameters are updated
    componentwise on their real and imaginary parts.

    Parameters
    ----------
    params : list of dict
        Parameters.
    grads : list of dict
        Gradients, same structure as params.
    opt : OptimState
        Optimizer state.

    Returns
    -------
    params : list of dict
        Updated parameters.
    opt : OptimState
        Updated optimizer state.

    """

    step = opt.step + 1
    b_1, b_2 = opt.beta1, opt.beta2

    m = tree_map(
        lambda m_, g: _componentwise(lambda a, b: b_1 * a + (1 - b_1) * b, m_, g),
        opt.m,
        grads,
    )
    v = tree_map(
        lambda v_, g: _componentwise(lambda a, b: b_2 * a + (1 - b_2) * b * b, v_, g),
        opt.v,
        grads,
    )

    def _update(p, m_, v_):
        def delta(m_c, v_c):
            m_hat = m_c / (1 - b_1**step)
            v_hat = v_c / (1 - b_2**step)
            return opt.lr * m_hat / (np.sqrt(v_hat) + opt.eps)

        return (p - _componentwise(delta, m_, v_)).astype(p.dtype)

    new_params = tree_map(_update, params, m, v)

    return new_params, replace(opt, m=m, v=v, step=step)
