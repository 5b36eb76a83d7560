import os


# Numerical tolerances
INGEST_NORMALIZATION_TOL = 1e-9  # measured tables carry rounding
GENERATED_NORMALIZATION_TOL = 1e-12
HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
DICHOTOMIC_TOL = 1e-9
CORRELATOR_TOL = 1e-9
REALIZATION_TOL = 1e-9
ASCENT_SLACK = 1e-9
ZERO_OPERATOR_NORM = 1e-14
ZERO_EIGENVALUE_TOL = 1e-12  # relative to the largest |eigenvalue|

# Outcome labels of dichotomic scenarios, in array order
DICHOTOMIC_LABELS = ('+1', '-1')

# Classical enumeration
DEFAULT_MAX_STRATEGIES = 10**9
ENUMERATION_CHUNK_SIZE = 4096  # dit assignments per worker task

# See-saw optimization
DEFAULT_RESTARTS = 50
DEFAULT_MAX_ITERATIONS = 500
DEFAULT_SEESAW_TOL = 1e-10
DEFAULT_SEED = 0
SEESAW_CHECKED_MAX_DIMENSION = 8

# Photonic experiment
DEFAULT_DL = 510.0  # fs, D*L of the BBO crystal
PRESET_PHI = 22.5  # degrees
DEFAULT_VISIBILITY = 1.0
SIGNAL_DIMENSION = 4
SIGNAL_BASIS_LABELS = ('H,+1', 'H,-1', 'V,+1', 'V,-1')

# Quadrature oracle for gamma(tau), in the dimensionless variable u = D*L*Omega/2
QUADRATURE_U_MAX = 2000.0
QUADRATURE_POINTS = 400001
QUADRATURE_TOL = 1e-3
QUADRATURE_IMAG_TOL = 1e-6

# Delay scan defaults
DEFAULT_TAU_MIN = 0.0
DEFAULT_TAU_MAX = 2 * DEFAULT_DL
DEFAULT_SCAN_STEPS = 101

# Certification
DEFAULT_K = 0.0

# Bounds of the I4 witness, d -> value
BUILTIN_I4_CLASSICAL_BOUNDS = {1: 3.0, 2: 5.0, 3: 7.0, 4: 9.0}
BUILTIN_I4_QUANTUM_BOUNDS = {1: 3.0, 2: 6.0, 3: 7.97, 4: 9.0}

# Parallelism
THREADS_ENV_VAR = 'DIMWIT_THREADS'


def default_thread_count():
    """Returns the worker count from the DIMWIT_THREADS environment variable, or the number of CPUs when the
    variable is unset or 0."""
    value = os.environ.get(THREADS_ENV_VAR, '').strip()
    if value:
        try:
            threads = int(value)
        except ValueError:
            raise ValueError('{} must be a non-negative integer, got {!r}.'.format(THREADS_ENV_VAR, value))
        if threads < 0:
            raise ValueError('{} must be a non-negative integer, got {!r}.'.format(THREADS_ENV_VAR, value))
        if threads > 0:
            return threads
    return os.cpu_count() or 1
