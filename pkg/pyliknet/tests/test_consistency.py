#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import unittest

# 3rd party imports
import numpy as np
from ddt import data, ddt, unpack
from scipy.special import expit

# Local imports
from .. import consistency, mri
from ..errors import ShapeError
from ..tensor import directional_derivative, tree_inner, tree_map
from . import crandn, generate_maps, generate_mask_array, random_direction

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def _operator(n_t=4, n_c=3, n_x=8, n_y=8, seed=0):
    maps = generate_maps(n_c, n_x, n_y, random=True)
    mask = generate_mask_array(n_t, n_y, 2.0, 2, seed=seed)
    return mri.EncodingOperator(maps, mask), mask


def _relative(analytic, numeric):
    return abs(analytic - numeric) / max(abs(numeric), 1e-12)


@ddt
class ImageDCTestCase(unittest.TestCase):
    def test_image_dc_zero_residual(self):
        op, _ = _operator()
        x_init = crandn(4, 8, 8, seed=1)
        y_u = op.forward(x_init)
        params = consistency.init_image_dc(eta=0.8, alpha=0.5)

        result = consistency.image_dc(x_init, x_init, y_u, op, params)
        np.testing.assert_allclose(result, x_init, atol=1e-12)

    def test_image_dc_eta_zero(self):
        op, _ = _operator()
        p, q = crandn(4, 8, 8, seed=1), crandn(4, 8, 8, seed=2)
        y_u = crandn(*op.kspace_shape, seed=3)
        params = consistency.init_image_dc(eta=0.0, alpha=0.25)

        result = consistency.image_dc(p, q, y_u, op, params)
        np.testing.assert_allclose(result, 0.25 * p + 0.75 * q, atol=1e-14)

    @data(0.0, 1.0)
    def test_image_dc_alpha_bounds(self, value):
        op, _ = _operator()
        p, q = crandn(4, 8, 8, seed=1), crandn(4, 8, 8, seed=2)
        y_u = crandn(*op.kspace_shape, seed=3)
        params = consistency.init_image_dc(eta=0.5, alpha=value)

        if value == 1.0:
            kept, other = p, q
            result = consistency.image_dc(kept, other, y_u, op, params)
            changed = consistency.image_dc(kept, 3.0 * other, y_u, op, params)
        else:
            kept, other = q, p
            result = consistency.image_dc(other, kept, y_u, op, params)
            changed = consistency.image_dc(3.0 * other, kept, y_u, op, params)

        np.testing.assert_array_equal(result, changed)

        _, record = consistency.image_dc_vjp(p, q, y_u, op, params)
        grads = record.pullback(crandn(4, 8, 8, seed=4))[3]
        self.assertEqual(float(grads["alpha"]), 0.0)

    @data(0.1, 0.5, 1.0)
    def test_image_dc_fidelity_decreases(self, eta):
        params = consistency.init_image_dc(eta=eta, alpha=0.5)

        for seed in range(20):
            op, _ = _operator(seed=seed)
            p, q = crandn(4, 8, 8, seed=seed), crandn(4, 8, 8, seed=seed + 100)
            y_u = op.forward(crandn(4, 8, 8, seed=seed + 200))
            x_init = 0.5 * p + 0.5 * q

            before = np.linalg.norm(op.forward(x_init) - y_u)
            after = np.linalg.norm(
                op.forward(consistency.image_dc(p, q, y_u, op, params)) - y_u
            )
            self.assertLessEqual(after, before + 1e-12)

    def test_image_dc_input(self):
        op, _ = _operator()
        params = consistency.init_image_dc()

        with self.assertRaises(ShapeError):
            consistency.image_dc(
                crandn(4, 8, 8), crandn(4, 8, 6), crandn(*op.kspace_shape), op, params
            )

    def test_image_dc_backward(self):
        op, _ = _operator()
        point = {
            "p": crandn(4, 8, 8, seed=1),
            "q": crandn(4, 8, 8, seed=2),
            "y_u": crandn(*op.kspace_shape, seed=3),
            "params": consistency.init_image_dc(eta=0.7, alpha=0.3),
        }

        def fun(z):
            return consistency.image_dc(z["p"], z["q"], z["y_u"], op, z["params"])

        c = crandn(4, 8, 8, seed=4)
        direction = tree_map(lambda a: random_direction(a, seed=5), point)

        _, record = consistency.image_dc_vjp(
            point["p"], point["q"], point["y_u"], op, point["params"]
        )
        g_p, g_q, g_y, g_params = record.pullback(c)
        grads = {"p": g_p, "q": g_q, "y_u": g_y, "params": g_params}

        numeric = directional_derivative(
            lambda z: float(np.real(np.vdot(c, fun(z)))), point, direction
        )
        self.assertLess(_relative(tree_inner(grads, direction), numeric), 1e-6)


@ddt
class KSpaceDCTestCase(unittest.TestCase):
    def test_init_kspace_dc(self):
        params = consistency.init_kspace_dc(2.5)
        self.assertAlmostEqual(float(np.logaddexp(0.0, params["mu"])), 2.5, places=12)

    def test_kspace_dc_mu_zero(self):
        _, mask = _operator()
        r, y_u = crandn(4, 3, 8, 8, seed=1), crandn(4, 3, 8, 8, seed=2)
        sampled = np.broadcast_to(mask[:, None, None, :] > 0, r.shape)

        result = consistency.kspace_dc(r, y_u, mask, {"mu": np.array(-np.inf)})
        np.testing.assert_array_equal(result[sampled], y_u[sampled])
        np.testing.assert_array_equal(result[~sampled], r[~sampled])

    def test_kspace_dc_average(self):
        mask = np.ones((1, 2))
        r = np.full((1, 1, 2, 2), 4.0 + 0j)
        y_u = np.full((1, 1, 2, 2), 2.0 + 0j)

        result = consistency.kspace_dc(r, y_u, mask, consistency.init_kspace_dc(1.0))
        np.testing.assert_allclose(result, 3.0, atol=1e-12)

    def test_kspace_dc_unsampled(self):
        r, y_u = crandn(2, 2, 4, 4, seed=1), crandn(2, 2, 4, 4, seed=2)
        mask = np.zeros((2, 4))

        result = consistency.kspace_dc(r, y_u, mask, consistency.init_kspace_dc(5.0))
        np.testing.assert_array_equal(result, r)

    def test_kspace_dc_large_mu(self):
        _, mask = _operator()
        r, y_u = crandn(4, 3, 8, 8, seed=1), crandn(4, 3, 8, 8, seed=2)

        result = consistency.kspace_dc(r, y_u, mask, consistency.init_kspace_dc(1e6))
        np.testing.assert_allclose(result, r, atol=1e-5)

    @data((3, 8), (4, 6), (4, 1, 8))
    def test_kspace_dc_mask_input(self, shape):
        with self.assertRaises(ShapeError):
            consistency.kspace_dc(
                crandn(4, 3, 8, 8), crandn(4, 3, 8, 8), np.ones(shape), consistency.init_kspace_dc()
            )

    def test_kspace_dc_input(self):
        with self.assertRaises(ShapeError):
            consistency.kspace_dc(
                crandn(4, 3, 8, 8), crandn(4, 2, 8, 8), np.ones((4, 8)), consistency.init_kspace_dc()
            )

    def test_kspace_dc_backward(self):
        _, mask = _operator()
        point = {
            "r": crandn(4, 3, 8, 8, seed=1),
            "y_u": crandn(4, 3, 8, 8, seed=2),
            "params": consistency.init_kspace_dc(0.7),
        }

        c = crandn(4, 3, 8, 8, seed=3)
        direction = tree_map(lambda a: random_direction(a, seed=4), point)

        _, record = consistency.kspace_dc_vjp(point["r"], point["y_u"], mask, point["params"])
        g_r, g_y, g_params = record.pullback(c)
        grads = {"r": g_r, "y_u": g_y, "params": g_params}

        def loss(z):
            out = consistency.kspace_dc(z["r"], z["y_u"], mask, z["params"])
            return float(np.real(np.vdot(c, out)))

        numeric = directional_derivative(loss, point, direction)
        self.assertLess(_relative(tree_inner(grads, direction), numeric), 1e-6)


@ddt
class ISLTestCase(unittest.TestCase):
    @data((0.5, 0.5), (0.3, 0.6), (0.9, 0.1))
    @unpack
    def test_init_isl(self, a, b):
        params = consistency.init_isl(a, b)
        self.assertAlmostEqual(float(expit(params["a"])), a, places=12)
        self.assertAlmostEqual(float(expit(params["b"])), b, places=12)

    @data((0.5, 0.5), (0.2, 0.9))
    @unpack
    def test_isl_consistent_pair(self, a, b):
        op, _ = _operator()
        x = crandn(4, 8, 8, seed=1)
        y = op.coil_expand(x)

        x_new, y_new = consistency.isl(x, y, op, consistency.init_isl(a, b))
        np.testing.assert_allclose(x_new, x, atol=1e-10)
        np.testing.assert_allclose(y_new, y, atol=1e-10)

    def test_isl_limits(self):
        op, _ = _operator()
        x, y = crandn(4, 8, 8, seed=1), crandn(4, 3, 8, 8, seed=2)

        params = {"a": np.array(np.inf), "b": np.array(-np.inf)}
        x_new, y_new = consistency.isl(x, y, op, params)
        np.testing.assert_allclose(y_new, op.coil_expand(x), atol=1e-12)
        np.testing.assert_array_equal(x_new, x)

        params = {"a": np.array(-np.inf), "b": np.array(np.inf)}
        x_new, y_new = consistency.isl(x, y, op, params)
        np.testing.assert_array_equal(y_new, y)
        np.testing.assert_allclose(x_new, op.coil_combine(y), atol=1e-12)

    def test_isl_backward(self):
        op, _ = _operator()
        point = {
            "x": crandn(4, 8, 8, seed=1),
            "y": crandn(4, 3, 8, 8, seed=2),
            "params": consistency.init_isl(0.3, 0.7),
        }

        c_x, c_y = crandn(4, 8, 8, seed=3), crandn(4, 3, 8, 8, seed=4)
        direction = tree_map(lambda a: random_direction(a, seed=5), point)

        _, record = consistency.isl_vjp(point["x"], point["y"], op, point["params"])
        g_x, g_y, g_params = record.pullback(c_x, c_y)
        grads = {"x": g_x, "y": g_y, "params": g_params}

        def loss(z):
            x_new, y_new = consistency.isl(z["x"], z["y"], op, z["params"])
            return float(np.real(np.vdot(c_x, x_new) + np.vdot(c_y, y_new)))

        numeric = directional_derivative(loss, point, direction)
        self.assertLess(_relative(tree_inner(grads, direction), numeric), 1e-6)


if __name__ == "__main__":
    unittest.main()
