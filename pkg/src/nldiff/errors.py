"""Exception types shared across the package."""


class NldiffError(Exception):
    """Base class for all package errors."""


class InvalidParams(NldiffError, ValueError):
    """Parameters outside the validity range of an operation."""


class NonConvergence(NldiffError):
    """A series evaluation hit its term cap before the stopping test fired."""


class QuadratureFailure(NldiffError):
    """Adaptive quadrature could not reach the requested tolerance."""


class GridTooCoarse(NldiffError, ValueError):
    """Physical sampling grid has fewer than 2K+1 points per axis."""


class UnknownProfile(NldiffError, KeyError):
    """Requested built-in profile name does not exist."""


class InsufficientData(NldiffError):
    """Not enough nonzero coefficient shells for a decay fit."""


class FitUnstable(NldiffError):
    """Least-squares decay fit residual exceeded its stability threshold."""


class ConfigError(NldiffError, ValueError):
    """Malformed or inconsistent run configuration."""
