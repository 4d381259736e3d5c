# Unit-modulus check for phases read back from matrices or files
UNIT_MODULUS_TOL = 1e-12

# Residual below which span{e_v, e_E} counts as H-invariant
SUBSPACE_TOL = 1e-10

# Slack on eigenvalue / quadratic-form / no-go bound comparisons
SPECTRAL_SLACK = 1e-9

# Row-sum tolerance met by the constructive routes
CONSTRUCTIVE_TOL = 1e-14

# Default acceptance tolerance for a swift configuration (numeric routes included)
SWIFT_TOL = 1e-10

# Max deviation of a simulated return curve from cos^2(sqrt(N) t)
PROFILE_TOL = 1e-9

# Return value that counts as a zero on a sampled time grid
GRID_ZERO_TOL = 1e-3
