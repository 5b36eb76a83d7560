import numpy as np

from dimwit.core.operators import _as_density_matrix, _as_observable
from dimwit.core.probability_table import ProbabilityTable
from dimwit.parameters import GENERATED_NORMALIZATION_TOL


def stack_operators(operators):
    return np.stack([op.entries for op in operators])


def correlator_matrix(states, observables):
    """Returns E_xy = Re tr(rho_x M_y) for stacked state and observable arrays of shapes (n, d, d) and (m, d, d)."""
    return np.real(np.einsum('xij,yji->xy', states, observables))


def probs_from_quantum(ensemble, observables):
    """Computes the Born-rule table P(+-1|x,y) = tr(rho_x M^y_{+-1}) with M^y_{+-1} = (1 +- M^y)/2.

    :param ensemble: States rho_x, x = 1..n
    :type ensemble: list of DensityMatrix (or arrays, which are validated)
    :param observables: Dichotomic observables M^y, y = 1..m
    :type observables: list of Observable (or arrays, which are validated)
    :returns: Dichotomic probability table
    :rtype: ProbabilityTable
    """
    ensemble = [_as_density_matrix(rho) for rho in ensemble]
    observables = [_as_observable(M) for M in observables]
    if not ensemble or not observables:
        raise ValueError('Need at least one state and one observable.')
    dims = {op.d for op in ensemble} | {op.d for op in observables}
    if len(dims) != 1:
        raise ValueError('All states and observables must share one dimension, got {}.'.format(sorted(dims)))
    e = np.clip(correlator_matrix(stack_operators(ensemble), stack_operators(observables)), -1, 1)
    return ProbabilityTable(np.stack(((1 + e) / 2, (1 - e) / 2)), tol=GENERATED_NORMALIZATION_TOL)
