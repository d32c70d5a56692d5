#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Built-in imports
import dataclasses
from dataclasses import dataclass
from typing import Tuple

# Local imports
from ..errors import ConfigurationError
from ..subnets import patch_windows

__author__ = "pyLIKNet developers"
__copyright__ = "Copyright 2024"
__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Prototype"

# (image net, low-rank, k-space branch, attention, ISL)
VARIANTS = {
    "A-INet": (True, False, False, True, False),
    "A-KNet": (False, False, True, True, False),
    "A-LINet": (True, True, False, True, False),
    "A-IKNet": (True, False, True, True, True),
    "LIKNet": (True, True, True, False, True),
    "A-LIKNet": (True, True, True, True, True),
}

_TOGGLES = (
    "enable_image_net",
    "enable_lowrank",
    "enable_kspace_branch",
    "enable_attention",
    "enable_isl",
)


@dataclass
class NetworkConfig:
    r"""Architecture of the unrolled network.

    The defaults give the desk-scale A-LIKNet: 2 iterations on 8 frames of
    32x32 pixels with 4 coils.

    Attributes
    ----------
    n_iter : int
        Number of unrolled iterations.
    n_frames, n_x, n_y, n_coils : int
        Data dims.
    filters : int
        Base filter count of the UNet.
    kspace_filters : int
        Hidden filter count of the k-space network.
    k_spatial, k_temporal, k_kspace : int
        Odd kernel extents of the spatial, temporal and k-space convolutions.
    patch_spec : tuple of int
        Low-rank patch counts (n_t, n_x, n_y).
    ratio : int
        Reduction ratio of the attention blocks.
    enable_image_net, enable_lowrank, enable_kspace_branch, enable_attention,
    enable_isl : bool
        Ablation toggles.
    kspace_residual : bool
        Residual path around the k-space network.
    svt_mode : {"exact", "frozen"}
        Patch cotangent of the singular value thresholding.
    variant : str
        Name of the ablation variant.

    """

    n_iter: int = 2
    n_frames: int = 8
    n_x: int = 32
    n_y: int = 32
    n_coils: int = 4
    filters: int = 4
    kspace_filters: int = 4
    k_spatial: int = 3
    k_temporal: int = 3
    k_kspace: int = 3
    patch_spec: Tuple[int, int, int] = (2, 2, 2)
    ratio: int = 2
    enable_image_net: bool = True
    enable_lowrank: bool = True
    enable_kspace_branch: bool = True
    enable_attention: bool = True
    enable_isl: bool = True
    kspace_residual: bool = True
    svt_mode: str = "exact"
    variant: str = "A-LIKNet"

    def __post_init__(self):
        self.patch_spec = tuple(int(s) for s in self.patch_spec)
        self.validate()

    @property
    def image_branch(self) -> bool:
        r"""True if the image branch (UNet and/or low-rank) runs."""
        return self.enable_image_net or self.enable_lowrank

    @property
    def dims(self) -> Tuple[int, int, int, int]:
        return self.n_frames, self.n_x, self.n_y, self.n_coils

    def validate(self):
        r"""Checks the consistency of the configuration.

        Raises
        ------
        ConfigurationError
            If the toggles or the dims are inconsistent.

        """

        if self.n_iter < 0:
            raise ConfigurationError(f"iteration count must be >= 0, got {self.n_iter}")

        if min(self.dims) < 1 or min(self.filters, self.kspace_filters, self.ratio) < 1:
            raise ConfigurationError("dims, filters and ratio must be positive")

        if any(k % 2 == 0 for k in (self.k_spatial, self.k_temporal, self.k_kspace)):
            raise ConfigurationError("kernel extents must be odd")

        if not self.image_branch and not self.enable_kspace_branch:
            raise ConfigurationError("at least one branch must be enabled")

        if self.enable_isl and not (self.image_branch and self.enable_kspace_branch):
            raise ConfigurationError("the ISL requires both branches")

        if self.svt_mode not in ("exact", "frozen"):
            raise ConfigurationError(f"unknown SVT gradient mode {self.svt_mode}")

        if self.enable_lowrank:
            patch_windows((self.n_frames, self.n_x, self.n_y), self.patch_spec)

    def to_dict(self) -> dict:
        out = dataclasses.asdict(self)
        out["patch_spec"] = list(self.patch_spec)

        return out

    @classmethod
    def from_dict(cls, values: dict) -> "NetworkConfig":
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(values) - names

        if unknown:
            raise ConfigurationError(f"unknown network keys {sorted(unknown)}")

        return cls(**values)

    @classmethod
    def from_variant(cls, name: str, **kwargs) -> "NetworkConfig":
        r"""Configuration of a named ablation variant.

        Parameters
        ----------
        name : {"A-INet", "A-KNet", "A-LINet", "A-IKNet", "LIKNet", "A-LIKNet"}
            Variant name.
        **kwargs
            Other fields of the configuration.

        Returns
        -------
        NetworkConfig
            Configuration with the toggles of the variant.

        Raises
        ------
        ConfigurationError
            If the variant is unknown.

        """

        if name not in VARIANTS:
            raise ConfigurationError(
                f"unknown variant {name}, expected one of {list(VARIANTS)}"
            )

        toggles = dict(zip(_TOGGLES, VARIANTS[name]))

        return cls(variant=name, **toggles, **kwargs)

    @classmethod
    def full_scale(cls, variant: str = "A-LIKNet") -> "NetworkConfig":
        r"""Full-scale configuration: 8 iterations, 25 frames of 176x176
        pixels, 15 coils, 12 base filters, 5x5 spatial kernels and (5, 4, 4)
        patches."""
        return cls.from_variant(
            variant,
            n_iter=8,
            n_frames=25,
            n_x=176,
            n_y=176,
            n_coils=15,
            filters=12,
            kspace_filters=12,
            k_spatial=5,
            k_temporal=3,
            k_kspace=3,
            patch_spec=(5, 4, 4),
        )
