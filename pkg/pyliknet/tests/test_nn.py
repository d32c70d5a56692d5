#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import unittest

# 3rd party imports
import numpy as np
from ddt import data, ddt, unpack

# Local imports
from .. import nn
from ..errors import ShapeError
from ..tensor import make_rng, numerical_cotangent, tree_map
from . import crandn, random_direction

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _relative_error(analytic, numeric):
    return np.max(np.abs(analytic - numeric)) / max(np.max(np.abs(numeric)), 1e-12)


def _direct_conv(x, kernel):
    c_out, c_in, *k_size = kernel.shape
    pads = [(0, 0)] + [(k // 2, k // 2) for k in k_size]
    x_pad = np.pad(x, pads)
    out = np.zeros((c_out, *x.shape[1:]), dtype=complex)

    for o in range(c_out):
        for idx in np.ndindex(*x.shape[1:]):
            for c in range(c_in):
                for taps in np.ndindex(*k_size):
                    pos = tuple(i + t for i, t in zip(idx, taps))
                    out[(o, *idx)] += kernel[(o, c, *taps)] * x_pad[(c, *pos)]

    return out


def _delta(n_c, k_size):
    kernel = np.zeros((n_c, n_c, *k_size), dtype=complex)

    for c in range(n_c):
        kernel[(c, c, *(k // 2 for k in k_size))] = 1.0

    return kernel


@ddt
class ConvNdTestCase(unittest.TestCase):
    def test_convnd_direct_sum(self):
        x = crandn(1, 3, 3, 3)
        kernel = crandn(1, 1, 3, 3, 3, seed=1)
        result = nn.convnd(x, kernel)
        self.assertLess(np.max(np.abs(result - _direct_conv(x, kernel))), 1e-12)

    def test_convnd_multichannel(self):
        x = crandn(2, 5, 4)
        kernel = crandn(3, 2, 3, 1, seed=2)
        result = nn.convnd(x, kernel, np.array([1j, 0, 2]))
        expected = _direct_conv(x, kernel) + np.array([1j, 0, 2])[:, None, None]
        np.testing.assert_allclose(result, expected, rtol=0, atol=1e-12)

    def test_convnd_linearity(self):
        x_1, x_2 = crandn(2, 2, 6, 6), crandn(2, 2, 6, 6, seed=1)
        kernel = crandn(3, 2, 3, 3, seed=2)
        lhs = nn.convnd((0.5 - 2j) * x_1 + x_2, kernel)
        rhs = (0.5 - 2j) * nn.convnd(x_1, kernel) + nn.convnd(x_2, kernel)
        np.testing.assert_allclose(lhs, rhs, rtol=0, atol=1e-12)

    @data(((2, 4, 4), (3, 3, 3, 3)), ((2, 4, 4), (3, 2, 2, 3)))
    @unpack
    def test_convnd_input(self, x_shape, k_shape):
        with self.assertRaises(ShapeError):
            nn.convnd(crandn(*x_shape), crandn(*k_shape))

    def test_convnd_backward(self):
        x = crandn(2, 2, 4, 3)
        kernel, bias = crandn(3, 2, 3, 3, seed=1), crandn(3, seed=2)
        out, record = nn.convnd_vjp(x, kernel, bias)
        c = random_direction(out, seed=3)
        g_x, g_kernel, g_bias = record.pullback(c)

        numeric = numerical_cotangent(lambda z: nn.convnd(z, kernel, bias), x, c, step=1.0)
        self.assertLess(_relative_error(g_x, numeric), 1e-10)
        numeric = numerical_cotangent(lambda k: nn.convnd(x, k, bias), kernel, c, step=1.0)
        self.assertLess(_relative_error(g_kernel, numeric), 1e-10)
        numeric = numerical_cotangent(lambda b: nn.convnd(x, kernel, b), bias, c, step=1.0)
        self.assertLess(_relative_error(g_bias, numeric), 1e-10)

    def test_conv3d_input(self):
        with self.assertRaises(ShapeError):
            nn.conv3d(crandn(2, 2, 4, 4), crandn(2, 2, 3, 3, 3))

        result = nn.conv3d(crandn(2, 1, 3, 4, 4), _delta(1, (3, 3, 3)))
        self.assertTupleEqual(result.shape, (2, 1, 3, 4, 4))


class Conv2dtTestCase(unittest.TestCase):
    def test_conv2dt_identity(self):
        x = crandn(4, 3, 5, 5)
        w_s = {"kernel": _delta(3, (3, 3))}
        w_t = {"kernel": _delta(3, (3,))}
        np.testing.assert_allclose(nn.conv2dt(x, w_s, w_t), x, rtol=0, atol=1e-15)

    def test_conv2dt_composition(self):
        x = crandn(4, 2, 5, 5)
        w_s = {"kernel": crandn(3, 2, 3, 3, seed=1), "bias": crandn(3, seed=2)}
        w_t = {"kernel": crandn(2, 3, 3, seed=3), "bias": crandn(2, seed=4)}
        result = nn.conv2dt(x, w_s, w_t)

        spatial = np.stack([_direct_conv(x_t, w_s["kernel"]) for x_t in x])
        spatial += w_s["bias"][None, :, None, None]
        padded = np.pad(spatial, [(1, 1), (0, 0), (0, 0), (0, 0)])
        expected = np.zeros((4, 2, 5, 5), dtype=complex)

        for i_t in range(4):
            for tap in range(3):
                expected[i_t] += np.tensordot(w_t["kernel"][..., tap], padded[i_t + tap], 1)

        expected += w_t["bias"][None, :, None, None]
        np.testing.assert_allclose(result, expected, rtol=0, atol=1e-12)

    def test_conv2dt_backward(self):
        rng = make_rng(0)
        x = crandn(3, 2, 4, 4)
        w_s = nn.init_conv(rng, 3, 2, (3, 3))
        w_t = nn.init_conv(rng, 2, 3, (3,))
        out, record = nn.conv2dt_vjp(x, w_s, w_t)
        c = random_direction(out, seed=5)
        g_x, grads = record.pullback(c)

        numeric = numerical_cotangent(lambda z: nn.conv2dt(z, w_s, w_t), x, c, step=1.0)
        self.assertLess(_relative_error(g_x, numeric), 1e-10)

        def temporal(k):
            return nn.conv2dt(x, w_s, {"kernel": k, "bias": w_t["bias"]})

        numeric = numerical_cotangent(temporal, w_t["kernel"], c, step=1.0)
        self.assertLess(_relative_error(grads["temporal"]["kernel"], numeric), 1e-10)
        self.assertSetEqual(set(grads["spatial"]), {"kernel", "bias"})


@ddt
class ModReluTestCase(unittest.TestCase):
    @data((0.0, 3 + 4j), (-5.0, 0j), (5.0, 6 + 8j), (-6.0, 0j))
    @unpack
    def test_modrelu_values(self, bias, expected):
        result = nn.modrelu(np.array([[3 + 4j]]), np.array([bias]))
        self.assertAlmostEqual(result[0, 0], expected, places=12)

    def test_modrelu_zero(self):
        result = nn.modrelu(np.zeros((1, 2), dtype=complex), np.array([1.0, 1.0]))
        np.testing.assert_array_equal(result, 0)

    def test_modrelu_zero_subgradient(self):
        z = np.array([[0j, 3 + 4j]])
        out, record = nn.modrelu_vjp(z, np.zeros(2))
        g_z, g_b = record.pullback(np.array([[1 + 1j, 1 + 1j]]))

        np.testing.assert_array_equal(out, [[0j, 3 + 4j]])
        self.assertEqual(g_z[0, 0], 0j)
        self.assertAlmostEqual(g_z[0, 1], 1 + 1j, places=12)
        self.assertEqual(g_b[0], 0.0)

    def test_modrelu_phase(self):
        z = crandn(2, 3, 4)
        result = nn.modrelu(z, np.full(3, 0.5))
        np.testing.assert_allclose(np.angle(result), np.angle(z), atol=1e-12)

    def test_modrelu_backward(self):
        z = crandn(2, 3, 4, 4)
        bias = make_rng(1).uniform(-0.5, 0.5, 3)
        out, record = nn.modrelu_vjp(z, bias)
        c = random_direction(out, seed=2)
        g_z, g_b = record.pullback(c)

        numeric = numerical_cotangent(lambda a: nn.modrelu(a, bias), z, c)
        self.assertLess(_relative_error(g_z, numeric), 1e-6)
        numeric = numerical_cotangent(lambda b: nn.modrelu(z, b), bias, c)
        self.assertLess(_relative_error(g_b, numeric), 1e-6)


class MaxPool3dTestCase(unittest.TestCase):
    def test_maxpool3d_constant(self):
        result = nn.maxpool3d(np.full((4, 2, 4, 4), 2 - 1j))
        self.assertTupleEqual(result.shape, (2, 2, 2, 2))
        np.testing.assert_array_equal(result, 2 - 1j)

    def test_maxpool3d_cell(self):
        x = np.zeros((2, 1, 2, 2), dtype=complex)
        x[0, 0, 0, 0] = 1.0
        x[1, 0, 1, 1] = -3j
        result = nn.maxpool3d(x)
        self.assertEqual(result[0, 0, 0, 0], -3j)

    def test_maxpool3d_odd(self):
        x = crandn(3, 2, 5, 4)
        result = nn.maxpool3d(x)
        self.assertTupleEqual(result.shape, nn.pooled_shape(x.shape))
        self.assertTupleEqual(result.shape, (2, 2, 3, 2))

    def test_maxpool3d_backward(self):
        x = crandn(3, 2, 5, 4)
        out, record = nn.maxpool3d_vjp(x)
        c = random_direction(out, seed=4)
        (g_x,) = record.pullback(c)
        numeric = numerical_cotangent(nn.maxpool3d, x, c)
        self.assertLess(_relative_error(g_x, numeric), 1e-6)

    def test_upsample3d_dims(self):
        x = crandn(3, 2, 5, 6)
        pooled = nn.maxpool3d(x)
        weights = nn.init_conv(make_rng(0), 4, 2, ())
        result = nn.upsample3d(pooled, weights, out_shape=x.shape)
        self.assertTupleEqual(result.shape, (3, 4, 5, 6))

        with self.assertRaises(ShapeError):
            nn.upsample3d(pooled, weights, out_shape=(9, 4, 5, 6))

    def test_upsample3d_backward(self):
        x = crandn(2, 2, 3, 3)
        weights = {"kernel": crandn(3, 2, seed=1), "bias": crandn(3, seed=2)}
        out, record = nn.upsample3d_vjp(x, weights, out_shape=(4, 3, 5, 6))
        c = random_direction(out, seed=3)
        g_x, grads = record.pullback(c)

        def fun(k):
            return nn.upsample3d(x, {"kernel": k, "bias": weights["bias"]}, (4, 3, 5, 6))

        numeric = numerical_cotangent(
            lambda z: nn.upsample3d(z, weights, (4, 3, 5, 6)), x, c, step=1.0
        )
        self.assertLess(_relative_error(g_x, numeric), 1e-10)
        numeric = numerical_cotangent(fun, weights["kernel"], c, step=1.0)
        self.assertLess(_relative_error(grads["kernel"], numeric), 1e-10)


@ddt
class SEAttentionTestCase(unittest.TestCase):
    @data(0, 1)
    def test_se_attention_zero_weights(self, axis):
        x = crandn(3, 2, 4, 4)
        weights = tree_map(np.zeros_like, nn.init_attention(make_rng(0), x.shape[axis]))
        result = nn.se_attention(x, weights, axis=axis)
        np.testing.assert_allclose(result, 0.5 * x, rtol=0, atol=1e-15)

    def test_se_attention_contraction(self):
        x = crandn(4, 3, 4, 4)
        result = nn.se_attention(x, nn.init_attention(make_rng(0), 4), axis=0)
        self.assertTupleEqual(result.shape, x.shape)
        self.assertLess(np.linalg.norm(result), np.linalg.norm(x))

    def test_se_attention_input(self):
        with self.assertRaises(ShapeError):
            nn.se_attention(crandn(4, 3, 4, 4), nn.init_attention(make_rng(0), 3), axis=0)

        with self.assertRaises(ShapeError):
            nn.se_attention(crandn(4, 3), nn.init_attention(make_rng(0), 3), axis=4)

    def test_se_attention_backward(self):
        x = crandn(2, 2, 2, 2)
        weights = nn.init_attention(make_rng(3), 2)
        weights["b1"] = np.full(2, 0.1)
        out, record = nn.se_attention_vjp(x, weights, axis=0)
        c = random_direction(out, seed=5)
        g_x, grads = record.pullback(c)

        numeric = numerical_cotangent(lambda z: nn.se_attention(z, weights), x, c)
        self.assertLess(_relative_error(g_x, numeric), 1e-6)

        for name in ("w1", "b1", "w2", "b2"):

            def fun(value, name=name):
                return nn.se_attention(x, {**weights, name: value})

            numeric = numerical_cotangent(fun, weights[name], c)
            self.assertLess(_relative_error(grads[name], numeric), 1e-6)


class DenseTestCase(unittest.TestCase):
    def test_dense_output(self):
        result = nn.dense(np.array([1.0, 2.0]), np.array([[1.0, 0.0], [1.0, 1.0]]), np.ones(2))
        np.testing.assert_array_equal(result, [2.0, 4.0])

    def test_dense_input(self):
        with self.assertRaises(ShapeError):
            nn.dense(np.ones(3), np.ones((2, 2)), np.ones(2))


class InitializersTestCase(unittest.TestCase):
    def test_init_conv(self):
        weights = nn.init_conv(make_rng(0), 8, 4, (3, 3))
        self.assertTupleEqual(weights["kernel"].shape, (8, 4, 3, 3))
        self.assertTrue(np.iscomplexobj(weights["kernel"]))
        np.testing.assert_array_equal(weights["bias"], 0)
        self.assertNotIn("bias", nn.init_conv(make_rng(0), 8, 4, (3,), bias=False))

    def test_init_attention(self):
        weights = nn.init_attention(make_rng(0), 8, ratio=2)
        self.assertTupleEqual(weights["w1"].shape, (8, 16))
        self.assertTupleEqual(weights["w2"].shape, (16, 8))

    def test_zeros_like_params(self):
        params = [{"a": nn.init_conv(make_rng(0), 2, 2, (3,))}]
        result = nn.zeros_like_params(params)
        self.assertFalse(np.any(result[0]["a"]["kernel"]))
