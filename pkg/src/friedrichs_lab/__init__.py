"""Numerical laboratory for Friedrichs-type Sobolev trace inequalities.

Library layout:

- ``measure``    discrete measure spaces and decreasing rearrangements
- ``norms``      rearrangement-invariant norm evaluation (Lebesgue, Lorentz,
                 Lorentz-Zygmund, Orlicz/Luxemburg, exponential)
- ``hardy``      one-dimensional Hardy-kernel operators and best-constant
                 estimation over nonincreasing functions
- ``geometry``   polygon and voxel domains, quadrature, first-hit ray casting
- ``potentials`` Riesz potentials, boundary-visibility integrals, pointwise
                 estimate checkers
- ``hajlasz``    upper gradients of boundary traces and their seminorms
- ``harness``    full inequality experiments, scaling and refinement studies
- ``cli``        command-line front end; ``figures`` renders report plots
"""

from .measure import (
    MeasureError,
    RearrangementProfile,
    SampledFunction,
    SampledMeasureSpace,
    ahlfors_constant,
    distribution,
    profile_eval,
    rearrange,
)

__version__ = "0.1.0"

__all__ = [
    "MeasureError",
    "RearrangementProfile",
    "SampledFunction",
    "SampledMeasureSpace",
    "ahlfors_constant",
    "distribution",
    "profile_eval",
    "rearrange",
    "__version__",
]
