import logging
import warnings

import numpy as np
from scipy.stats import unitary_group

from dimwit.bounds.bound_result import BoundResult
from dimwit.bounds.convergence_checker import ConvergenceChecker
from dimwit.core.operators import DensityMatrix, Observable, _as_density_matrix, _as_observable
from dimwit.core.quantum import probs_from_quantum, correlator_matrix, stack_operators
from dimwit.core.witness_spec import eval_witness
from dimwit.helper_funcs import *
from dimwit.util import DelayedExecutor


logger = logging.getLogger(__name__)


class SeesawConfig:
    """Settings of the see-saw optimization."""

    def __init__(self, restarts=DEFAULT_RESTARTS, max_iters=DEFAULT_MAX_ITERATIONS, tol=DEFAULT_SEESAW_TOL,
                 seed=DEFAULT_SEED, max_workers=None):
        """
        :param restarts: Number of random restarts
        :type restarts: int
        :param max_iters: Iteration limit per restart; one iteration is an observable step plus a state step
        :type max_iters: int
        :param tol: Stop a restart when the relative improvement of one iteration drops below this
        :type tol: float
        :param seed: Restart r draws its initial observables from the generator seeded with seed + r
        :type seed: int
        :param max_workers: Thread count; None reads DIMWIT_THREADS
        :type max_workers: int

        """
        if int(restarts) < 1:
            raise ValueError('At least one restart is needed.')
        if int(max_iters) < 1:
            raise ValueError('max_iters must be positive.')
        if not tol > 0:
            raise ValueError('Convergence tolerance must be positive.')
        self.restarts = int(restarts)
        self.max_iters = int(max_iters)
        self.tol = float(tol)
        self.seed = int(seed)
        self.max_workers = max_workers


class QuantumRealization:
    """States rho_x (rank 1) and dichotomic observables M^y of a common dimension d that realize a witness value."""

    def __init__(self, ensemble, observables):
        self.ensemble = [_as_density_matrix(rho) for rho in ensemble]
        self.observables = [_as_observable(M) for M in observables]
        dims = {op.d for op in self.ensemble} | {op.d for op in self.observables}
        if len(dims) != 1:
            raise ValueError('Realization mixes dimensions {}.'.format(sorted(dims)))

    @property
    def d(self):
        return self.ensemble[0].d

    def probabilities(self):
        return probs_from_quantum(self.ensemble, self.observables)

    def to_json_dict(self):
        return {'d': self.d,
                'states': [complex_matrix_to_pairs(rho.entries) for rho in self.ensemble],
                'observables': [complex_matrix_to_pairs(M.entries) for M in self.observables]}


def _require_correlator_form(spec):
    if not spec.is_correlator_form:
        raise ValueError('See-saw optimization needs a dichotomic witness in correlator form; {} has none.'
                         .format(spec.name))


def _state_step(c, observables):
    """rho_x = projector onto the top eigenvector of A_x = sum_y c_xy M^y."""
    vectors = top_eigenvectors(np.einsum('xy,yij->xij', c, observables))
    return np.einsum('xi,xj->xij', vectors, vectors.conj())


def _observable_step(c, states):
    """M^y = sign(B_y) with B_y = sum_x c_xy rho_x."""
    operators, _ = hermitian_signs(np.einsum('xy,xij->yij', c, states))
    return operators


def _witness_value(c, states, observables):
    return float(np.sum(c * correlator_matrix(states, observables)))


def _check_counts(spec, count, name, expected):
    if count != expected:
        raise ValueError('Witness {} needs {} {}, got {}.'.format(spec.name, expected, name, count))


def optimal_states_for_observables(spec, observables):
    """Returns the pure states maximizing the witness for fixed observables: rho_x projects onto a top eigenvector
    of A_x = sum_y c_xy M^y (the first basis vector when A_x = 0).

    :param spec: Correlator-form witness
    :type spec: WitnessSpec
    :param observables: M^y, y = 1..m
    :type observables: list of Observable
    :rtype: list of DensityMatrix
    """
    _require_correlator_form(spec)
    observables = [_as_observable(M) for M in observables]
    _check_counts(spec, len(observables), 'observables', spec.m)
    if len({M.d for M in observables}) != 1:
        raise ValueError('Observables must share one dimension.')
    states = _state_step(spec.c, stack_operators(observables))
    return [DensityMatrix(hermitize(rho)) for rho in states]


def optimal_observables_for_states(spec, ensemble):
    """Returns the observables maximizing the witness for fixed states: M^y = sum_i sign(l_i) |v_i><v_i| over the
    eigenpairs of B_y = sum_x c_xy rho_x, zero eigenvalues taking +1. Measurement y then contributes sum_i |l_i|.

    :param spec: Correlator-form witness
    :type spec: WitnessSpec
    :param ensemble: rho_x, x = 1..n
    :type ensemble: list of DensityMatrix
    :rtype: list of Observable
    """
    _require_correlator_form(spec)
    ensemble = [_as_density_matrix(rho) for rho in ensemble]
    _check_counts(spec, len(ensemble), 'states', spec.n)
    if len({rho.d for rho in ensemble}) != 1:
        raise ValueError('States must share one dimension.')
    observables = _observable_step(spec.c, stack_operators(ensemble))
    return [Observable(M) for M in observables]


def random_observable(d, rng):
    """Draws M = V diag(s) V^dagger with V a Haar-random unitary and s a random +-1 pattern that is not constant
    (for d = 1 the single sign is random)."""
    if d == 1:
        return np.array([[rng.choice([-1.0, 1.0])]], dtype=complex)
    signs = rng.choice([-1.0, 1.0], size=d)
    while np.all(signs == signs[0]):
        signs = rng.choice([-1.0, 1.0], size=d)
    V = unitary_group.rvs(d, random_state=rng)
    return hermitize((V * signs) @ V.conj().T)


class _RestartResult:
    def __init__(self, value, states, observables, iterations, converged, trajectory):
        self.value = value
        self.states = states
        self.observables = observables
        self.iterations = iterations
        self.converged = converged
        self.trajectory = trajectory


def _check_ascent(previous, current, restart, step):
    if current < previous - ASCENT_SLACK:
        raise RuntimeError('See-saw restart {} decreased the witness from {:.15g} to {:.15g} in the {} step.'
                           .format(restart, previous, current, step))


def _run_restart(c, d, config, restart):
    rng = np.random.default_rng(config.seed + restart)
    m = c.shape[1]
    observables = np.stack([random_observable(d, rng) for _ in range(m)])
    states = _state_step(c, observables)
    value = _witness_value(c, states, observables)
    trajectory = [value]
    checker = ConvergenceChecker(config.max_iters, config.tol, label='Restart {}: '.format(restart))
    n_iteration = 0
    while checker.has_not_converged(value, n_iteration):
        observables = _observable_step(c, states)
        half_value = _witness_value(c, states, observables)
        _check_ascent(value, half_value, restart, 'observable')
        states = _state_step(c, observables)
        new_value = _witness_value(c, states, observables)
        _check_ascent(half_value, new_value, restart, 'state')
        trajectory.extend((half_value, new_value))
        value = new_value
        n_iteration += 1
    return _RestartResult(value, states, observables, n_iteration, checker.converged, trajectory)


def seesaw_trajectories(spec, d, config=None):
    """Runs every restart of the see-saw and returns their results in restart order. Each result carries the
    witness value after every half-step."""
    _require_correlator_form(spec)
    if int(d) != d or d < 1:
        raise ValueError('Quantum dimension must be a positive integer, got {}.'.format(d))
    config = config or SeesawConfig()
    executor = DelayedExecutor(config.max_workers)
    for restart in range(config.restarts):
        executor.add_func(_run_restart, (spec.c, int(d), config, restart))
    return executor.execute()


def seesaw_bound(spec, d, config=None):
    """Lower-bounds the quantum maximum Q_d of a dichotomic witness by see-saw optimization: alternately choosing
    the optimal observables for the current states and the optimal pure states for the current observables, from
    several random initial observables.

    :param spec: Correlator-form witness
    :type spec: WitnessSpec
    :param d: Hilbert-space dimension
    :type d: int
    :param config: Optimization settings
    :type config: SeesawConfig
    :returns: The best value over restarts with its realization; model 'quantum'
    :rtype: BoundResult
    """
    if d > SEESAW_CHECKED_MAX_DIMENSION:
        warnings.warn('See-saw accuracy is only checked up to d = {:d}; d = {} may carry larger rounding errors.'
                      .format(SEESAW_CHECKED_MAX_DIMENSION, d))
    config = config or SeesawConfig()
    results = seesaw_trajectories(spec, d, config)
    best = results[0]
    for result in results[1:]:
        if result.value > best.value:
            best = result

    realization = QuantumRealization([DensityMatrix(hermitize(rho)) for rho in best.states],
                                     [Observable(M) for M in best.observables])
    value = eval_witness(spec, realization.probabilities())
    if abs(value - best.value) > REALIZATION_TOL:
        raise RuntimeError('Realization re-evaluates to {:.15g}, the see-saw reported {:.15g}.'
                           .format(value, best.value))
    ceiling = spec.algebraic_maximum()
    if value > ceiling + REALIZATION_TOL:
        raise RuntimeError('See-saw value {:.15g} exceeds the algebraic maximum {:.15g}.'.format(value, ceiling))
    if not best.converged:
        logger.warning('Best see-saw restart for %s at d=%d stopped at the iteration limit (%d).',
                       spec.name, d, config.max_iters)
    logger.debug('See-saw bound of %s at d=%d: %.12g', spec.name, d, value)
    return BoundResult(value, spec.name, int(d), 'quantum', realization,
                       converged=best.converged,
                       iterations=[result.iterations for result in results],
                       restart_values=[result.value for result in results])
