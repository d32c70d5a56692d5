#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import unittest

# 3rd party imports
import numpy as np
from ddt import data, ddt, unpack
from xarray.core.dataarray import DataArray
from xarray.core.dataset import Dataset

# Local imports
from .. import mri
from ..errors import ConfigurationError, InfeasibleAccelerationError, ShapeError
from ..metrics import psnr
from ..tensor import inner, make_rng
from . import crandn, direct_dft2, generate_cine, generate_kspace, generate_maps
from . import generate_mask_array

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


@ddt
class EncodingOperatorTestCase(unittest.TestCase):
    def test_encoding_operator_dims(self):
        with self.assertRaises(ShapeError):
            mri.EncodingOperator(generate_maps(2, 8, 8), np.ones((4, 6)))

        op = mri.EncodingOperator(generate_maps(2, 8, 8), np.ones((4, 8)))

        with self.assertRaises(ShapeError):
            op.forward(generate_cine(4, 8, 6))

        self.assertTupleEqual(op.image_shape, (4, 8, 8))
        self.assertTupleEqual(op.kspace_shape, (4, 2, 8, 8))

    def test_forward_encode_zeros(self):
        maps = generate_maps(2, 8, 8)
        mask = generate_mask_array(4, 8)
        result = mri.forward_encode(np.zeros((4, 8, 8), dtype=complex), maps, mask)
        self.assertIsInstance(result, DataArray)
        self.assertFalse(np.any(result.data))

        result = mri.forward_encode(generate_cine(), maps, np.zeros((4, 8)))
        self.assertFalse(np.any(result.data))

    def test_forward_encode_unsampled(self):
        mask = generate_mask_array(4, 8)
        result = mri.forward_encode(generate_cine(), generate_maps(2, 8, 8), mask)
        self.assertFalse(np.any(result.data * (mask == 0)[:, None, None, :]))

    def test_forward_encode_direct_sum(self):
        x = generate_cine(1, 4, 4, seed=3)
        result = mri.forward_encode(x, np.ones((1, 4, 4)), np.ones((1, 4)))
        np.testing.assert_allclose(result.data[:, 0], direct_dft2(x), rtol=0, atol=1e-12)

    def test_adjoint_encode_zeros(self):
        result = mri.adjoint_encode(
            np.zeros((4, 2, 8, 8), dtype=complex), generate_maps(2, 8, 8), np.ones((4, 8))
        )
        self.assertIsInstance(result, DataArray)
        self.assertFalse(np.any(result.data))

    def test_adjoint_encode_inverse(self):
        x = generate_cine(3, 6, 6)
        maps, mask = np.ones((1, 6, 6)), np.ones((3, 6))
        y = mri.forward_encode(x, maps, mask)
        result = mri.adjoint_encode(y, maps, mask)
        np.testing.assert_allclose(result.data, x, rtol=0, atol=1e-12)

    @data(True, False)
    def test_encoding_adjoint(self, random_maps):
        for seed in range(100):
            rng = make_rng(seed)
            n_c = int(rng.integers(1, 4))
            maps = generate_maps(n_c, 8, 6, random=random_maps)
            mask = (rng.uniform(size=(3, 6)) > 0.5).astype(float)
            op = mri.EncodingOperator(maps, mask)

            x = crandn(3, 8, 6, seed=seed)
            y = crandn(3, n_c, 8, 6, seed=seed + 500)
            a_x = op.forward(x)
            error = abs(inner(a_x, y) - inner(x, op.adjoint(y)))
            self.assertLess(error / (np.linalg.norm(a_x) * np.linalg.norm(y) + 1e-300), 1e-10)

    def test_encoding_normal_identity(self):
        op = mri.EncodingOperator(generate_maps(4, 8, 8), np.ones((2, 8)))
        x = generate_cine(2, 8, 8)
        np.testing.assert_allclose(op.normal(x), x, rtol=0, atol=1e-10)

    def test_coil_combine_adjoint(self):
        op = mri.EncodingOperator(generate_maps(3, 6, 6), generate_mask_array(2, 6, 2.0, 2))
        x, y = generate_cine(2, 6, 6), generate_kspace(2, 3, 6, 6)
        lhs = inner(op.coil_expand(x), y)
        rhs = inner(x, op.coil_combine(y))
        self.assertAlmostEqual(abs(lhs - rhs), 0.0, places=10)


@ddt
class GenerateMaskTestCase(unittest.TestCase):
    def test_generate_mask_full(self):
        result = mri.generate_mask(8, 32, 1.0, 4, make_rng(0))
        self.assertTrue(np.all(result.data == 1.0))

    def test_generate_mask_count(self):
        result = mri.generate_mask(8, 32, 4.0, 4, make_rng(0))
        self.assertIsInstance(result, DataArray)
        self.assertTupleEqual(result.dims, ("time", "ky"))
        np.testing.assert_array_equal(result.data.sum(axis=1), np.full(8, 8.0))
        self.assertTrue(np.all(result.data[:, 14:18] == 1.0))

    @data(2.0, 3.0, 4.0, 6.0, 8.0)
    def test_generate_mask_properties(self, acceleration):
        result = mri.generate_mask(16, 32, acceleration, 2, make_rng(5)).data
        self.assertTrue(np.all(np.isin(result, (0.0, 1.0))))
        achieved = 32 / result.sum(axis=1)
        self.assertTrue(np.all(np.abs(achieved - acceleration) <= 0.15 * acceleration))
        self.assertGreater(len({tuple(row) for row in result}), 1)

    def test_generate_mask_determinism(self):
        a = mri.generate_mask(8, 32, 4.0, 4, make_rng(11))
        b = mri.generate_mask(8, 32, 4.0, 4, make_rng(11))
        np.testing.assert_array_equal(a.data, b.data)

    @data(
        (0.5, 4, ConfigurationError),
        (100.0, 4, InfeasibleAccelerationError),
        (24.0, 4, InfeasibleAccelerationError),
        (6.0, 6, InfeasibleAccelerationError),
    )
    @unpack
    def test_generate_mask_errors(self, acceleration, center_lines, error):
        with self.assertRaises(error):
            mri.generate_mask(8, 32, acceleration, center_lines, make_rng(0))

    @data(3.3, 5.0, 6.0)
    def test_generate_mask_tolerance(self, acceleration):
        with self.assertRaises(InfeasibleAccelerationError):
            mri.generate_mask(4, 8, acceleration, 1, make_rng(0))

    def test_generate_mask_center_only(self):
        result = mri.generate_mask(4, 32, 8.0, 4, make_rng(0))
        np.testing.assert_array_equal(result.data.sum(axis=1), np.full(4, 4.0))
        self.assertTrue(np.all(result.data[:, 14:18] == 1.0))
        self.assertEqual(result.attrs["achieved_acceleration"], 8.0)

    def test_default_center_lines(self):
        self.assertEqual(mri.default_center_lines(176), 24)
        self.assertEqual(mri.default_center_lines(32), 4)


@ddt
class GenerateCoilMapsTestCase(unittest.TestCase):
    @data(1, 2, 4, 8)
    def test_generate_coil_maps_normalization(self, n_coils):
        result = mri.generate_coil_maps(n_coils, 32, 32)
        self.assertIsInstance(result, DataArray)
        np.testing.assert_allclose(
            np.sum(np.abs(result.data) ** 2, axis=0), 1.0, rtol=0, atol=1e-9
        )

    def test_generate_coil_maps_single(self):
        result = mri.generate_coil_maps(1, 16, 16)
        np.testing.assert_allclose(np.abs(result.data), 1.0, atol=1e-12)

    def test_generate_coil_maps_quadrants(self):
        result = mri.generate_coil_maps(4, 32, 32)

        for i_c, magnitude in enumerate(np.abs(result.data)):
            i_x, i_y = np.unravel_index(np.argmax(magnitude), magnitude.shape)
            theta = 2 * np.pi * i_c / 4 + np.pi / 4
            self.assertEqual(i_x >= 16, np.cos(theta) > 0)
            self.assertEqual(i_y >= 16, np.sin(theta) > 0)

    def test_generate_coil_maps_input(self):
        with self.assertRaises(ConfigurationError):
            mri.generate_coil_maps(0, 8, 8)


class GeneratePhantomTestCase(unittest.TestCase):
    def test_generate_phantom_output(self):
        result = mri.generate_phantom(8, 32, 32, make_rng(0))
        self.assertIsInstance(result, DataArray)
        self.assertTupleEqual(result.dims, ("time", "x", "y"))
        self.assertAlmostEqual(np.max(np.abs(result.data)), 1.0, places=9)

    def test_generate_phantom_static_background(self):
        result = mri.generate_phantom(8, 32, 32, make_rng(0)).data
        varying = np.any(result != result[0], axis=0)
        self.assertTrue(np.any(varying))
        self.assertLess(np.mean(varying), 0.5)

    def test_generate_phantom_low_rank(self):
        image = mri.generate_phantom(8, 32, 32, make_rng(0)).data
        noisy = image + 0.05 * crandn(*image.shape, seed=3)

        def tail(x):
            s = np.linalg.svd(mri.casorati(x), compute_uv=False)
            return np.sum(s[3:] ** 2) / np.sum(s**2)

        self.assertLess(tail(image), tail(noisy))

    def test_generate_phantom_input(self):
        with self.assertRaises(ConfigurationError):
            mri.generate_phantom(1, 8, 8)


class CasoratiTestCase(unittest.TestCase):
    def test_casorati_inverse(self):
        x = generate_cine(4, 3, 5)
        matrix = mri.casorati(x)
        self.assertTupleEqual(matrix.shape, (15, 4))
        np.testing.assert_array_equal(matrix[:, 2], x[2].ravel())
        np.testing.assert_array_equal(mri.inverse_casorati(matrix, x.shape), x)


class MakeDatasetTestCase(unittest.TestCase):
    def test_make_dataset_empty(self):
        self.assertListEqual(mri.make_dataset(0), [])

    def test_make_dataset_consistency(self):
        samples = mri.make_dataset(3, dims=(4, 16, 16, 2), r_range=(2, 4), seed=1)
        self.assertEqual(len(samples), 3)

        for sample in samples:
            self.assertIsInstance(sample, Dataset)
            mask = sample.mask.data[:, None, None, :]
            np.testing.assert_array_equal(
                sample.under_kspace.data, mask * sample.full_kspace.data
            )
            op = mri.EncodingOperator(sample.maps, np.ones_like(sample.mask.data))
            np.testing.assert_array_equal(
                sample.full_kspace.data, op.coil_expand(sample.reference.data)
            )
            self.assertTrue(2 <= sample.attrs["acceleration"] <= 4)

    def test_make_dataset_zero_filled(self):
        for sample in mri.make_dataset(3, dims=(4, 16, 16, 2), r_range=(2, 4), seed=2):
            op = mri.EncodingOperator(sample.maps, sample.mask)
            full = mri.EncodingOperator(sample.maps, np.ones_like(sample.mask.data))
            ref = sample.reference.data
            zero_filled = op.adjoint(sample.under_kspace.data)
            recon = full.adjoint(sample.full_kspace.data)
            self.assertLess(psnr(zero_filled, ref), psnr(recon, ref))

    def test_make_dataset_determinism(self):
        a = mri.make_dataset(2, dims=(4, 8, 8, 2), r_range=(1.6, 2.0), seed=3)
        b = mri.make_dataset(2, dims=(4, 8, 8, 2), r_range=(1.6, 2.0), seed=3)

        for s_a, s_b in zip(a, b):
            np.testing.assert_array_equal(s_a.under_kspace.data, s_b.under_kspace.data)

    def test_make_dataset_range(self):
        with self.assertRaises(ConfigurationError):
            mri.make_dataset(1, dims=(4, 8, 8, 2), r_range=(0.5, 2))

    def test_cine_sample_dims(self):
        with self.assertRaises(ShapeError):
            mri.cine_sample(
                generate_cine(4, 8, 8),
                generate_kspace(4, 2, 8, 8),
                generate_kspace(4, 2, 8, 8),
                np.ones((4, 6)),
                generate_maps(2, 8, 8),
                2.0,
            )
