#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
from typing import Callable, Iterator, Tuple

# 3rd party imports
import numpy as np

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"


def tree_map(fun: Callable, tree, *others):
    r"""Applies fun leafwise to one or several parameter trees of identical
    structure (nested dicts and lists of arrays)."""

    if isinstance(tree, dict):
        return {k: tree_map(fun, v, *(o[k] for o in others)) for k, v in tree.items()}

    if isinstance(tree, (list, tuple)):
        return type(tree)(
            tree_map(fun, v, *(o[i] for o in others)) for i, v in enumerate(tree)
        )

    return fun(tree, *others)


def tree_leaves(tree, prefix: str = "") -> Iterator[Tuple[str, np.ndarray]]:
    r"""Yields (path, leaf) pairs in a deterministic order; paths join keys
    and list indices with dots."""

    if isinstance(tree, dict):
        for k, v in tree.items():
            yield from tree_leaves(v, f"{prefix}{k}.")
    elif isinstance(tree, (list, tuple)):
        for i, v in enumerate(tree):
            yield from tree_leaves(v, f"{prefix}{i}.")
    else:
        yield prefix[:-1], tree


def tree_inner(a, b) -> float:
    r"""Real inner product Re <a, b> summed over the leaves of two trees."""
    products = tree_map(lambda x, y: np.real(np.vdot(np.ravel(x), np.ravel(y))), a, b)

    return float(sum(value for _, value in tree_leaves(products)))


def tree_axpy(alpha: float, x, y):
    r"""Leafwise alpha x + y."""
    return tree_map(lambda a, b: alpha * a + b, x, y)
