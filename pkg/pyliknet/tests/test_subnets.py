#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import unittest

# 3rd party imports
import numpy as np
from ddt import data, ddt, unpack
from scipy.special import logit

# Local imports
from .. import mri, subnets
from ..errors import ConfigurationError, ShapeError
from ..tensor import directional_derivative, make_rng, tree_inner, tree_map
from . import crandn, random_direction

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _svt_oracle(matrix, tau):
    u, sigma, vh = np.linalg.svd(matrix, full_matrices=False)
    sigma = np.where(sigma > sigma[0] / (1 + np.exp(-tau)), sigma, 0.0)
    return (u * sigma) @ vh


def _vjp_error(fun, grad_fun, x, seed=0):
    r"""Relative error between the analytic and the finite-difference
    derivative of Re <c, fun(x)> along a random direction."""
    out = fun(x)
    c = random_direction(out, seed=seed)
    d = tree_map(lambda a: random_direction(a, seed=seed + 1), x)

    def loss(z):
        return float(np.real(np.vdot(c, fun(z))))

    numeric = directional_derivative(loss, x, d)
    analytic = tree_inner(grad_fun(x, c), d)

    return abs(analytic - numeric) / max(abs(numeric), 1e-12)


@ddt
class PatchesTestCase(unittest.TestCase):
    def test_patch_split_global(self):
        x = crandn(4, 6, 6)
        patches = subnets.patch_split(x, (1, 1, 1))
        self.assertEqual(len(patches), 1)
        np.testing.assert_array_equal(patches[0], x)
        np.testing.assert_array_equal(subnets.patch_merge(patches, (1, 1, 1), x.shape), x)

    def test_patch_windows_full_scale(self):
        windows = subnets.patch_windows((25, 176, 176), (5, 4, 4))
        self.assertEqual(len(windows), 80)

        for window in windows:
            self.assertEqual(window[0].stop - window[0].start, 5)

    @data(((8, 32, 32), (2, 2, 2)), ((8, 17, 23), (4, 3, 2)), ((6, 9, 9), (3, 4, 4)))
    @unpack
    def test_patch_merge_round_trip(self, dims, spec):
        x = crandn(*dims)
        self.assertTrue(np.all(subnets.coverage(dims, spec) >= 1))
        result = subnets.patch_merge(subnets.patch_split(x, spec), spec, dims)
        np.testing.assert_allclose(result, x, rtol=0, atol=1e-12)

    def test_patch_windows_overlap(self):
        windows = subnets.patch_windows((2, 32, 32), (1, 2, 2))
        sizes = {(w[1].stop - w[1].start, w[2].stop - w[2].start) for w in windows}
        self.assertSetEqual(sizes, {(20, 20)})

    @data(((8, 32, 32), (3, 2, 2)), ((8, 32, 32), (0, 2, 2)), ((8, 4, 4), (1, 5, 1)))
    @unpack
    def test_patch_windows_input(self, dims, spec):
        with self.assertRaises(ConfigurationError):
            subnets.patch_windows(dims, spec)

    def test_patch_merge_input(self):
        patches = subnets.patch_split(crandn(4, 8, 8), (2, 2, 2))

        with self.assertRaises(ShapeError):
            subnets.patch_merge(patches[:-1], (2, 2, 2), (4, 8, 8))


@ddt
class SVTTestCase(unittest.TestCase):
    def test_svt_patch_oracle(self):
        for seed in range(50):
            rng = make_rng(seed)
            n_rows, n_cols = int(rng.integers(2, 9)), int(rng.integers(2, 9))
            tau = float(rng.uniform(-3.0, 1.0))
            matrix = crandn(n_rows, n_cols, seed=seed)
            result = subnets.svt_patch(matrix, tau)

            self.assertLess(np.max(np.abs(result - _svt_oracle(matrix, tau))), 1e-10)
            rank = np.linalg.matrix_rank(result)
            self.assertGreaterEqual(rank, 1)
            self.assertLessEqual(rank, np.linalg.matrix_rank(matrix))

    def test_svt_patch_tau_zero(self):
        matrix = crandn(6, 4, seed=3)
        result = subnets.svt_patch(matrix, 0.0)
        self.assertLess(np.max(np.abs(result - _svt_oracle(matrix, 0.0))), 1e-10)

    def test_svt_patch_identity(self):
        patch = crandn(4, 3, 5)
        np.testing.assert_allclose(subnets.svt_patch(patch, -20.0), patch, rtol=0, atol=1e-10)

    @data(-2.0, 0.0, 3.0)
    def test_svt_patch_rank_one(self, tau):
        patch = np.einsum("t,x,y->txy", crandn(4), crandn(3, seed=1), crandn(5, seed=2))
        np.testing.assert_allclose(subnets.svt_patch(patch, tau), patch, rtol=0, atol=1e-10)

    def test_svt_patch_singular_values(self):
        matrix = crandn(12, 5)
        before = np.linalg.svd(matrix, compute_uv=False)
        after = np.linalg.svd(subnets.svt_patch(matrix, -0.5), compute_uv=False)
        self.assertTrue(np.all(after <= before + 1e-10))
        self.assertAlmostEqual(after[0], before[0], places=10)

    @data("exact", "frozen")
    def test_svt_backward_all_kept(self, mode):
        matrix, upstream = crandn(6, 4), crandn(6, 4, seed=1)
        g_patch, g_tau = subnets.svt_backward(matrix, -50.0, upstream, mode)
        np.testing.assert_allclose(g_patch, upstream, rtol=0, atol=1e-10)
        self.assertLess(abs(g_tau), 1e-6)

    @data((6, 4), (4, 6), (5, 5))
    @unpack
    def test_svt_backward_exact(self, n_rows, n_cols):
        matrix = crandn(n_rows, n_cols, seed=4)
        error = _vjp_error(
            lambda m: subnets.svt_patch(m, 0.0),
            lambda m, c: subnets.svt_backward(m, 0.0, c)[0],
            matrix,
        )
        self.assertLess(error, 1e-5)

    def test_svt_backward_frozen(self):
        matrix, upstream = crandn(6, 4), crandn(6, 4, seed=1)
        u, sigma, vh = np.linalg.svd(matrix, full_matrices=False)
        keep = sigma > sigma[0] / (1 + np.exp(-0.0))
        g_patch, _ = subnets.svt_backward(matrix, 0.0, upstream, "frozen")

        u_k, v_k = u[:, keep], vh[keep].conj().T
        residual = (upstream - u_k @ u_k.conj().T @ upstream) @ (
            np.eye(4) - v_k @ v_k.conj().T
        )
        np.testing.assert_allclose(g_patch, upstream - residual, rtol=0, atol=1e-10)

    def test_svt_backward_tau(self):
        matrix = crandn(8, 5, seed=6)
        sigma = np.linalg.svd(matrix, compute_uv=False)
        tau = float(logit(sigma[1] / sigma[0])) + 0.01
        upstream = crandn(8, 5, seed=7)
        _, g_tau = subnets.svt_backward(matrix, tau, upstream)

        def loss(t):
            out = subnets.svt_patch_surrogate(matrix, float(t))
            return float(np.real(np.vdot(upstream, out)))

        numeric = (loss(tau + 1e-6) - loss(tau - 1e-6)) / 2e-6
        self.assertGreater(abs(numeric), 1e-3)
        self.assertLess(abs(g_tau - numeric) / abs(numeric), 1e-4)

    def test_svt_patch_mode(self):
        with self.assertRaises(ConfigurationError):
            subnets.svt_patch_vjp(crandn(4, 3), 0.0, mode="soft")


class LowRankTestCase(unittest.TestCase):
    def test_init_lowrank(self):
        params = subnets.init_lowrank((2, 2, 2))
        np.testing.assert_array_equal(params["tau"], np.full(8, -2.0))

    def test_lowrank_forward_identity(self):
        x = crandn(8, 16, 16)
        params = subnets.init_lowrank((2, 2, 2), tau=-20.0)
        result = subnets.lowrank_forward(x, params, (2, 2, 2))
        np.testing.assert_allclose(result, x, rtol=0, atol=1e-9)

    def test_lowrank_forward_non_expansive(self):
        x = crandn(8, 16, 16)
        params = {"tau": np.linspace(-2.0, 1.0, 8)}
        result = subnets.lowrank_forward(x, params, (2, 2, 2))
        self.assertLessEqual(np.linalg.norm(result), np.linalg.norm(x))

    def test_lowrank_forward_denoising(self):
        clean = mri.generate_phantom(8, 32, 32, make_rng(0)).data
        noisy = clean + 0.05 * crandn(8, 32, 32, seed=1)
        result = subnets.lowrank_forward(noisy, subnets.init_lowrank((1, 2, 2), -1.0), (1, 2, 2))
        self.assertLess(np.mean(np.abs(result - clean) ** 2), np.mean(np.abs(noisy - clean) ** 2))

    def test_lowrank_forward_input(self):
        with self.assertRaises(ShapeError):
            subnets.lowrank_forward(crandn(8, 16, 16), {"tau": np.zeros(3)}, (2, 2, 2))

    def test_lowrank_backward(self):
        x = crandn(4, 8, 8)
        params = {"tau": np.array([-1.0, 0.0, -0.5, -2.0, -1.5, -0.2, -0.8, -1.2])}

        def grad(z, c):
            _, record = subnets.lowrank_forward_vjp(z, params, (2, 2, 2))
            return record.pullback(c)[0]

        error = _vjp_error(lambda z: subnets.lowrank_forward(z, params, (2, 2, 2)), grad, x)
        self.assertLess(error, 1e-5)


@ddt
class UNetTestCase(unittest.TestCase):
    def test_unet_forward_zero_weights(self):
        x = crandn(4, 8, 8)
        params = tree_map(np.zeros_like, subnets.init_unet(make_rng(0), 4))
        np.testing.assert_array_equal(subnets.unet_forward(x, params), x)

    @data((4, 16), (8, 16), (4, 32), (8, 32), (5, 10))
    @unpack
    def test_unet_forward_dims(self, n_t, n_xy):
        params = subnets.init_unet(make_rng(0), n_t, filters=2)
        result = subnets.unet_forward(crandn(n_t, n_xy, n_xy), params)
        self.assertTupleEqual(result.shape, (n_t, n_xy, n_xy))

    def test_unet_forward_trace(self):
        trace = []
        params = subnets.init_unet(make_rng(0), 4, filters=2)
        subnets.unet_forward_vjp(crandn(4, 8, 8), params, trace=trace)
        self.assertListEqual(trace, ["se_attention.time"] * 2)

        trace = []
        subnets.unet_forward_vjp(crandn(4, 8, 8), params, attention=False, trace=trace)
        self.assertListEqual(trace, [])

    @data(True, False)
    def test_unet_backward(self, attention):
        params = subnets.init_unet(make_rng(1), 4, filters=2)
        x = crandn(4, 8, 8)

        def grad(z, c):
            _, record = subnets.unet_forward_vjp(z, params, attention)
            return record.pullback(c)[0]

        error = _vjp_error(lambda z: subnets.unet_forward(z, params, attention), grad, x)
        self.assertLess(error, 1e-5)

    def test_unet_backward_params(self):
        params = subnets.init_unet(make_rng(2), 4, filters=2)
        x = crandn(4, 8, 8)

        def grad(p, c):
            _, record = subnets.unet_forward_vjp(x, p)
            return record.pullback(c)[1]

        error = _vjp_error(lambda p: subnets.unet_forward(x, p), grad, params)
        self.assertLess(error, 1e-5)


@ddt
class KNetTestCase(unittest.TestCase):
    def test_knet_forward_zero_weights(self):
        y = crandn(2, 2, 4, 4)
        params = tree_map(np.zeros_like, subnets.init_knet(make_rng(0), 2))
        np.testing.assert_array_equal(subnets.knet_forward(y, params), y)

    @data(2, 4)
    def test_knet_forward_dims(self, n_coils):
        params = subnets.init_knet(make_rng(0), n_coils, filters=2)
        result = subnets.knet_forward(crandn(3, n_coils, 6, 6), params)
        self.assertTupleEqual(result.shape, (3, n_coils, 6, 6))

    def test_init_knet_bias_free(self):
        params = subnets.init_knet(make_rng(0), 2)

        for layer in range(3):
            self.assertNotIn("bias", params[f"conv{layer}"])

    def test_knet_forward_trace(self):
        trace = []
        subnets.knet_forward_vjp(crandn(2, 2, 4, 4), subnets.init_knet(make_rng(0), 2), trace=trace)
        self.assertListEqual(trace, ["se_attention.coil"] * 2)

    @data((True, True), (False, True), (True, False))
    @unpack
    def test_knet_backward(self, attention, residual):
        params = subnets.init_knet(make_rng(3), 2, filters=2)
        y = crandn(2, 2, 4, 4)

        def fun(p):
            return subnets.knet_forward(y, p, attention, residual)

        def grad(p, c):
            _, record = subnets.knet_forward_vjp(y, p, attention, residual)
            return record.pullback(c)[1]

        self.assertLess(_vjp_error(fun, grad, params), 1e-5)

        def grad_y(z, c):
            _, record = subnets.knet_forward_vjp(z, params, attention, residual)
            return record.pullback(c)[0]

        error = _vjp_error(lambda z: subnets.knet_forward(z, params, attention, residual), grad_y, y)
        self.assertLess(error, 1e-5)
