import numpy as np
from scipy.linalg import eigvalsh

from dimwit.helper_funcs import *


class _HermitianOperator:
    """Common base of the d x d Hermitian operators. The entries are stored as a read-only complex array."""

    def __init__(self, entries):
        entries = np.array(entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError('{} must be a square matrix, got shape {}.'.format(type(self).__name__, entries.shape))
        if not np.all(np.isfinite(entries)):
            raise ValueError('{} contains non-finite entries.'.format(type(self).__name__))
        if not is_hermitian(entries):
            raise ValueError('{} is not Hermitian.'.format(type(self).__name__))
        entries.setflags(write=False)
        self.entries = entries

    @property
    def d(self):
        return self.entries.shape[0]

    def eigenvalues(self):
        return eigvalsh(self.entries)


class DensityMatrix(_HermitianOperator):
    """A d-dimensional quantum state: Hermitian, unit trace and positive semidefinite."""

    def __init__(self, entries):
        super().__init__(entries)
        trace = np.trace(self.entries)
        if abs(trace - 1) > TRACE_TOL:
            raise ValueError('Density matrix has trace {:.15g}, expected 1.'.format(trace.real))
        min_eigenvalue = self.eigenvalues()[0]
        if min_eigenvalue < -PSD_TOL:
            raise ValueError('Density matrix has negative eigenvalue {:.3g}.'.format(min_eigenvalue))

    @classmethod
    def from_vector(cls, vector):
        """Returns the pure state |v><v| of a (not necessarily normalized) vector."""
        return cls(projector(vector))

    @classmethod
    def basis_projector(cls, d, index):
        vector = np.zeros(d, dtype=complex)
        vector[index] = 1
        return cls.from_vector(vector)

    @classmethod
    def maximally_mixed(cls, d):
        return cls(np.eye(d) / d)

    def purity(self):
        """Returns tr(rho^2)."""
        return float(np.real(np.trace(self.entries @ self.entries)))

    def rank(self, tol=1e-9):
        return int(np.sum(self.eigenvalues() > tol))


class Observable(_HermitianOperator):
    """A dichotomic +-1 observable M = M_{+1} - M_{-1} of a projective measurement, i.e. a Hermitian operator with
    M^2 = 1."""

    def __init__(self, entries):
        super().__init__(entries)
        identity = np.eye(self.d)
        if not np.allclose(self.entries @ self.entries, identity, rtol=0, atol=DICHOTOMIC_TOL):
            raise ValueError('Observable does not square to the identity; it is not a dichotomic +-1 observable.')

    @classmethod
    def from_signs(cls, signs):
        """Returns the diagonal observable with the given +-1 entries."""
        return cls(np.diag(np.asarray(signs, dtype=float)))

    def effects(self):
        """Returns the two projectors (M_{+1}, M_{-1}) = ((1 + M)/2, (1 - M)/2)."""
        identity = np.eye(self.d)
        return (identity + self.entries) / 2, (identity - self.entries) / 2


def _as_density_matrix(rho):
    return rho if isinstance(rho, DensityMatrix) else DensityMatrix(rho)


def _as_observable(M):
    return M if isinstance(M, Observable) else Observable(M)
