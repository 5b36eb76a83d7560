"""
.. module:: helper_funcs
    :synopsis: Contains short numeric and serialization utilities needed by other modules.

"""
import json

import numpy as np

from dimwit.parameters import *


def tri(t):
    """The triangle function tri(t) = max(1 - |t|, 0).

    :param t: Argument
    :type t: float or numpy array of floats
    :returns: Triangle function value(s)
    :rtype: float or numpy array
    """
    return np.maximum(1 - np.abs(t), 0)


def is_hermitian(matrix, tol=HERMITICITY_TOL):
    """Checks that a square matrix equals its conjugate transpose within an absolute tolerance."""
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return np.allclose(matrix, matrix.conj().T, rtol=0, atol=tol)


def top_eigenvectors(matrices):
    """Returns, for each Hermitian matrix in a stack, the normalized eigenvector of its largest eigenvalue. Zero
    matrices get the first basis vector.

    :param matrices: Stack of Hermitian matrices
    :type matrices: numpy array of shape (N, d, d)
    :returns: Eigenvectors as rows
    :rtype: complex numpy array of shape (N, d)
    """
    matrices = np.asarray(matrices, dtype=complex)
    _, vectors = np.linalg.eigh(matrices)
    top = vectors[:, :, -1].copy()
    zero = np.linalg.norm(matrices, axis=(1, 2)) < ZERO_OPERATOR_NORM
    top[zero] = 0
    top[zero, 0] = 1
    return top


def hermitian_signs(matrices):
    """Replaces every eigenvalue of each Hermitian matrix in a stack by its sign, zero eigenvalues mapping to +1.
    Returns the dichotomic operators and the sums of absolute eigenvalues.

    :param matrices: Stack of Hermitian matrices
    :type matrices: numpy array of shape (N, d, d)
    :returns: (operators of shape (N, d, d), trace norms of shape (N,))
    :rtype: tuple
    """
    matrices = np.asarray(matrices, dtype=complex)
    values, vectors = np.linalg.eigh(matrices)
    zero = np.linalg.norm(matrices, axis=(1, 2)) < ZERO_OPERATOR_NORM
    values[zero] = 0
    scale = np.max(np.abs(values), axis=1, keepdims=True)
    signs = np.where(values >= -ZERO_EIGENVALUE_TOL * scale, 1.0, -1.0)
    operators = np.einsum('nij,nj,nkj->nik', vectors, signs, vectors.conj())
    operators[zero] = np.eye(matrices.shape[1])
    return hermitize(operators), np.sum(np.abs(values), axis=1)


def hermitize(matrix):
    """Removes the anti-Hermitian rounding residue of a matrix (or stack of matrices) that is Hermitian in exact
    arithmetic."""
    return 0.5 * (matrix + np.swapaxes(matrix, -1, -2).conj())


def projector(vector):
    """Returns the rank-1 projector onto a (not necessarily normalized) vector."""
    vector = np.asarray(vector, dtype=complex)
    vector = vector / np.linalg.norm(vector)
    return np.outer(vector, vector.conj())


def complex_matrix_to_pairs(matrix):
    """Encodes a complex matrix as nested lists of [re, im] pairs."""
    matrix = np.asarray(matrix, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in matrix]


def pairs_to_complex_matrix(pairs):
    """Decodes nested lists of [re, im] pairs into a complex numpy matrix."""
    arr = np.asarray(pairs, dtype=float)
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ValueError('Matrix entries must be [re, im] pairs.')
    return arr[..., 0] + 1j * arr[..., 1]


def to_json(obj):
    """Serializes with sorted keys and fixed indentation so that equal inputs give byte-identical output."""
    return json.dumps(obj, sort_keys=True, indent=2)


