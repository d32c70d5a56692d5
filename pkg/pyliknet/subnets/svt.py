#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import logging
from typing import Tuple

# 3rd party imports
import numpy as np
from numpy.typing import NDArray
from scipy import linalg
from scipy.special import expit

# Local imports
from ..errors import ConfigurationError, NumericError
from ..mri import casorati, inverse_casorati
from ..tensor import OpRecord

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

SURROGATE_WIDTH = 0.01


def _as_matrix(patch):
    patch = np.asarray(patch)

    if patch.ndim == 2:
        return patch, lambda m: m

    return casorati(patch), lambda m: inverse_casorati(m, patch.shape)


def _svd(matrix, index):
    try:
        return linalg.svd(matrix, full_matrices=False, lapack_driver="gesdd")
    except linalg.LinAlgError:
        logging.warning("gesdd failed on patch %d, retrying with gesvd", index)

    try:
        return linalg.svd(matrix, full_matrices=False, lapack_driver="gesvd")
    except linalg.LinAlgError as err:
        raise NumericError(f"SVD did not converge on patch {index}") from err


def _threshold(tau, sigma):
    return expit(tau) * sigma[0] if sigma.size else 0.0


def _dsigmoid(s):
    e = expit(s)
    return e * (1.0 - e)


def _exact_pullback(matrix, u, sigma, vh, keep, g):
    # tall orientation: rows >= columns so that V spans the whole row space
    if matrix.shape[0] < matrix.shape[1]:
        g_t = _exact_pullback(
            matrix.conj().T, vh.conj().T, sigma, u.conj().T, keep, g.conj().T
        )
        return g_t.conj().T

    v = vh.conj().T
    v_keep = v[:, keep]
    lam = sigma**2
    n_cols = v.shape[1]

    factor = np.zeros((n_cols, n_cols))
    kept, dropped = np.nonzero(keep)[0], np.nonzero(~keep)[0]

    if kept.size and dropped.size:
        diff = lam[kept][:, None] - lam[dropped][None, :]
        factor[np.ix_(kept, dropped)] = 1.0 / diff
        factor[np.ix_(dropped, kept)] = 1.0 / diff.T

    inner = v.conj().T @ (matrix.conj().T @ g) @ v
    w = v @ (factor * inner) @ v.conj().T

    return g @ (v_keep @ v_keep.conj().T) + matrix @ (w + w.conj().T)


def _frozen_pullback(u, vh, keep, g):
    u_k = u[:, keep]
    v_k = vh[keep].conj().T
    residual = g - u_k @ (u_k.conj().T @ g)
    residual = residual - (residual @ v_k) @ v_k.conj().T

    return g - residual


def svt_patch_vjp(
    patch: NDArray, tau: float, index: int = 0, mode: str = "exact"
) -> Tuple[NDArray, OpRecord]:
    r"""svt_patch with its differentiation record. The pullback returns
    (g_patch, g_tau).

    Parameters
    ----------
    patch : numpy.ndarray
        Patch (frames, x, y) or its Casorati matrix.
    tau : float
        Threshold coefficient.
    index : int, Optional
        Patch index used in error messages.
    mode : {"exact", "frozen"}, Optional
        Patch cotangent. "exact" differentiates the hard-thresholded
        reconstruction through the singular subspaces; "frozen" treats U and
        V as constants. Default is "exact".

    See Also
    --------
    pyliknet.subnets.svt_patch, pyliknet.subnets.svt_backward

    """

    if mode not in ("exact", "frozen"):
        raise ConfigurationError(f"unknown SVT gradient mode {mode}")

    matrix, restore = _as_matrix(patch)
    u, sigma, vh = _svd(matrix, index)
    zeta = _threshold(tau, sigma)
    keep = sigma > zeta

    out = restore((u[:, keep] * sigma[keep]) @ vh[keep])

    def pullback(g):
        g_m, _ = _as_matrix(g)

        if mode == "exact":
            g_patch = _exact_pullback(matrix, u, sigma, vh, keep, g_m)
        else:
            g_patch = _frozen_pullback(u, vh, keep, g_m)

        g_tau = 0.0

        if sigma.size and sigma[0] > 0:
            eps = SURROGATE_WIDTH * sigma[0]
            proj = np.real(np.einsum("ij,ik,kj->j", u.conj(), g_m, vh.conj().T))
            d_sigma = -sigma * _dsigmoid((sigma - zeta) / eps) / eps
            g_tau = float(np.sum(proj * d_sigma) * _dsigmoid(tau) * sigma[0])

        return restore(g_patch), g_tau

    return out, OpRecord("svt_patch", (out.shape,), pullback)


def svt_patch(patch: NDArray, tau: float, index: int = 0) -> NDArray:
    r"""Singular value thresholding of one spatial-temporal patch.

    The patch is reshaped to a Casorati matrix (pixels x frames) and
    decomposed as U S V^H. With zeta = sigmoid(tau) * sigma_max, every
    singular value above zeta is kept exactly and the others are zeroed.
    Since sigmoid(tau) < 1 the largest singular value always survives.

    Parameters
    ----------
    patch : numpy.ndarray
        Patch (frames, x, y), or directly a Casorati matrix.
    tau : float
        Learned threshold coefficient.
    index : int, Optional
        Patch index used in error messages.

    Returns
    -------
    numpy.ndarray
        Thresholded patch with the dims of the input.

    Raises
    ------
    NumericError
        If the SVD does not converge.

    """

    out, _ = svt_patch_vjp(patch, tau, index)

    return out


def svt_patch_surrogate(patch: NDArray, tau: float, index: int = 0) -> NDArray:
    r"""Smoothed singular value thresholding used to check the threshold
    gradient. Each singular value sigma becomes
    sigma * sigmoid((sigma - zeta) / eps) with eps = 0.01 sigma_max.

    Parameters
    ----------
    patch : numpy.ndarray
        Patch (frames, x, y), or directly a Casorati matrix.
    tau : float
        Threshold coefficient.
    index : int, Optional
        Patch index used in error messages.

    Returns
    -------
    numpy.ndarray
        Softly thresholded patch.

    """

    matrix, restore = _as_matrix(patch)
    u, sigma, vh = _svd(matrix, index)

    if not sigma.size or sigma[0] == 0:
        return restore(np.zeros_like(matrix))

    zeta = _threshold(tau, sigma)
    soft = sigma * expit((sigma - zeta) / (SURROGATE_WIDTH * sigma[0]))

    return restore((u * soft) @ vh)


def svt_backward(
    patch: NDArray, tau: float, upstream: NDArray, mode: str = "exact"
) -> Tuple[NDArray, float]:
    r"""Cotangents of svt_patch with respect to the patch and tau.

    The patch cotangent follows mode. The tau cotangent is taken through
    the smoothed step of svt_patch_surrogate, the hard threshold having zero
    derivative almost everywhere.

    Parameters
    ----------
    patch : numpy.ndarray
        Patch the forward was evaluated at.
    tau : float
        Threshold coefficient.
    upstream : numpy.ndarray
        Cotangent of the thresholded patch.
    mode : {"exact", "frozen"}, Optional
        Patch cotangent form. Default is "exact".

    Returns
    -------
    g_patch : numpy.ndarray
        Cotangent of the patch.
    g_tau : float
        Cotangent of tau.

    """

    _, record = svt_patch_vjp(patch, tau, mode=mode)

    return record.pullback(np.asarray(upstream))
