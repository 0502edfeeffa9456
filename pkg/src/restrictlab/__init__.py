"""Numerical toolkit for Fourier restriction to the sphere for block-symmetric functions."""

__version__ = "0.1.0"

from .quadrature import QuadratureSpec
from .specfun import bessel_j, bessel_lambda, bessel_split, sigma_hat, sphere_area
from .symgeom import (CapProfile, LorentzExponent, RadialGrid, RadialProfile2D, SymmetryParams,
                      TruncationWarning, lorentz_norm, lp_norm_2d, slice_integrate)
from .transforms import extension_operator, split_transform, symmetric_fourier

__all__ = [
    "CapProfile", "LorentzExponent", "QuadratureSpec", "RadialGrid", "RadialProfile2D",
    "SymmetryParams", "TruncationWarning", "bessel_j", "bessel_lambda", "bessel_split",
    "extension_operator", "lorentz_norm", "lp_norm_2d", "sigma_hat", "slice_integrate",
    "sphere_area", "split_transform", "symmetric_fourier",
]
