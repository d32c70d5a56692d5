#!/usr/bin/env python
# -*- coding: utf-8 -*-

# 3rd party imports
import numpy as np

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def make_rng(seed: int = 0) -> np.random.Generator:
    r"""Seeded counter-based pseudo-random generator.

    Uses the Philox counter-based bit generator so that a given seed yields
    the same stream on every platform.

    Parameters
    ----------
    seed : int, Optional
        64-bit seed. Default is 0.

    Returns
    -------
    numpy.random.Generator
        Generator.

    """

    return np.random.Generator(np.random.Philox(int(seed)))
