"""Shared numerical tolerances.

All singularity guards and invariant tolerances used across the package live
here so they can be reviewed (and, if ever needed, retuned) in one place.
They are sized for double precision at array dimensions up to 64.
"""

# Magnitude below which a scalar denominator is treated as singular.
SINGULARITY_EPS = 1e-12

# Allowed violation of the distortionless constraint w^H a0 = gamma after an
# update step.
CONSTRAINT_TOL = 1e-8

# Elementwise tolerance for Hermitian-symmetry checks on inverse-correlation
# matrices.
HERMITIAN_TOL = 1e-10
