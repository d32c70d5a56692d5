#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .plot_reconstruction import plot_reconstruction

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

__all__ = ["plot_reconstruction"]
