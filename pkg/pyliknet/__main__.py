#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import sys

# Local imports
from .cli import main

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

sys.exit(main())
