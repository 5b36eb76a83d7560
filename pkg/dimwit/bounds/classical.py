import itertools
import logging

import numpy as np

from dimwit.bounds.bound_result import BoundResult
from dimwit.core.probability_table import ProbabilityTable
from dimwit.core.witness_spec import eval_witness
from dimwit.exceptions import StrategyLimitError
from dimwit.helper_funcs import *
from dimwit.util import DelayedExecutor


logger = logging.getLogger(__name__)


def outcome_values(k):
    """Returns the response values in enumeration order: (+1, -1) for dichotomic witnesses, 1..k otherwise."""
    return (1, -1) if k == 2 else tuple(range(1, k + 1))


class ClassicalStrategy:
    """A deterministic classical strategy of dimension d: preparation x sends the dit assignment[x] in 1..d, and
    measurement y answers responses[y][j - 1] on dit j."""

    def __init__(self, d, assignment, responses, k=2):
        """
        :param d: Classical dimension
        :type d: int
        :param assignment: Dit value of each preparation, in 1..d
        :type assignment: sequence of int
        :param responses: For each measurement, the outcome returned on dits 1..d
        :type responses: sequence of sequences
        :param k: Number of outcomes; outcomes are +-1 when k = 2 and 1..k otherwise
        :type k: int

        """
        allowed = outcome_values(k)
        self.d = int(d)
        self.k = int(k)
        self.assignment = tuple(int(a) for a in assignment)
        self.responses = tuple(tuple(int(b) for b in response) for response in responses)
        if self.d < 1:
            raise ValueError('Classical dimension must be at least 1.')
        if any(not 1 <= a <= self.d for a in self.assignment):
            raise ValueError('Dit assignment {} leaves 1..{}.'.format(self.assignment, self.d))
        for y, response in enumerate(self.responses):
            if len(response) != self.d:
                raise ValueError('Response of measurement {} defines {} dit values, expected {}.'
                                 .format(y + 1, len(response), self.d))
            if any(b not in allowed for b in response):
                raise ValueError('Response of measurement {} uses outcomes outside {}.'.format(y + 1, allowed))

    def to_json_dict(self):
        return {'d': self.d, 'assignment': list(self.assignment), 'responses': [list(r) for r in self.responses]}

    def __eq__(self, other):
        return (isinstance(other, ClassicalStrategy) and
                (self.d, self.k, self.assignment, self.responses) ==
                (other.d, other.k, other.assignment, other.responses))

    def __repr__(self):
        return 'ClassicalStrategy(d={}, assignment={}, responses={})'.format(self.d, self.assignment, self.responses)


def strategy_to_probs(s, n, m):
    """Embeds a deterministic strategy as the table P(b|x,y) = 1 if responses[y](assignment[x]) = b, else 0.

    :param s: The strategy
    :type s: ClassicalStrategy
    :param n: Number of preparations
    :type n: int
    :param m: Number of measurements
    :type m: int
    :rtype: ProbabilityTable
    """
    if len(s.assignment) != n:
        raise ValueError('Strategy assigns {} preparations, expected {}.'.format(len(s.assignment), n))
    if len(s.responses) != m:
        raise ValueError('Strategy answers {} measurements, expected {}.'.format(len(s.responses), m))
    index_of = {b: i for i, b in enumerate(outcome_values(s.k))}
    p = np.zeros((s.k, n, m))
    for x, dit in enumerate(s.assignment):
        for y, response in enumerate(s.responses):
            p[index_of[response[dit - 1]], x, y] = 1
    return ProbabilityTable(p, tol=GENERATED_NORMALIZATION_TOL)


def enumerate_strategies(n, m, d, k=2):
    """Yields all d^n * (k^d)^m deterministic strategies in lexicographic order: by assignment, then by responses,
    with outcomes ordered as in :func:`outcome_values`."""
    values = outcome_values(k)
    all_responses = list(itertools.product(values, repeat=d))
    for assignment in itertools.product(range(1, d + 1), repeat=n):
        for responses in itertools.product(all_responses, repeat=m):
            yield ClassicalStrategy(d, assignment, responses, k)


def strategy_count(n, m, d, k):
    return d**n * k**(d * m)


def _assignments(start, stop, n, d):
    """Returns the dit assignments with indices start..stop-1 as 0-based digits, most significant digit first."""
    indices = np.arange(start, stop, dtype=np.int64)
    powers = d ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (indices[:, np.newaxis] // powers) % d


def _is_canonical(assignments):
    """Marks assignments whose dit values appear for the first time in increasing order (0, 1, 2, ...)."""
    running_max = np.maximum.accumulate(assignments, axis=1)
    ok = assignments[:, 0] == 0
    ok &= np.all(assignments[:, 1:] <= running_max[:, :-1] + 1, axis=1)
    return ok


def _best_in_chunk(D, start, stop, d, symmetry_reduction):
    k, n, m = D.shape
    assignments = _assignments(start, stop, n, d)
    if symmetry_reduction:
        assignments = assignments[_is_canonical(assignments)]
        if len(assignments) == 0:
            return None
    one_hot = (assignments[:, :, np.newaxis] == np.arange(d)).astype(float)
    # scores[i, y, j, b]: witness contribution of answering b on dit j for measurement y
    scores = np.einsum('ixj,bxy->iyjb', one_hot, D)
    values = scores.max(axis=-1).sum(axis=(1, 2))
    best = int(np.argmax(values))
    return float(values[best]), assignments[best], scores[best].argmax(axis=-1)


def classical_bound(spec, d, max_strategies=DEFAULT_MAX_STRATEGIES, symmetry_reduction=False, max_workers=None):
    """Computes the exact maximum C_d of a witness over classical systems of dimension d.

    The classical set is a polytope whose vertices are the deterministic strategies, so the maximum of the linear
    witness is attained at one of them. For a fixed dit assignment the witness separates into independent terms per
    (measurement, dit value), so the best responses are found term by term; this covers all d^n * (k^d)^m strategies
    exactly. Dimensions above n behave like d = n.

    :param spec: The witness
    :type spec: WitnessSpec
    :param d: Classical dimension
    :type d: int
    :param max_strategies: Refuse enumerations larger than this
    :type max_strategies: int
    :param symmetry_reduction: Scan only assignments that are canonical under dit relabeling
    :type symmetry_reduction: bool
    :param max_workers: Thread count; None reads DIMWIT_THREADS
    :type max_workers: int
    :returns: The bound with the lexicographically first maximizing strategy
    :rtype: BoundResult
    """
    if int(d) != d or d < 1:
        raise ValueError('Classical dimension must be a positive integer, got {}.'.format(d))
    d = int(d)
    k, n, m = spec.shape
    d_eff = min(d, n)
    count = strategy_count(n, m, d_eff, k)
    if count > max_strategies:
        raise StrategyLimitError(count, max_strategies)
    if d_eff < d:
        logger.info('Dimension %d exceeds the %d preparations; enumerating d=%d.', d, n, d_eff)

    executor = DelayedExecutor(max_workers)
    n_assignments = d_eff**n
    for start in range(0, n_assignments, ENUMERATION_CHUNK_SIZE):
        stop = min(start + ENUMERATION_CHUNK_SIZE, n_assignments)
        executor.add_func(_best_in_chunk, (spec.D, start, stop, d_eff, symmetry_reduction))
    best = None
    for chunk_best in executor.execute():
        if chunk_best is not None and (best is None or chunk_best[0] > best[0]):
            best = chunk_best
    value, assignment, response_indices = best

    values = outcome_values(k)
    responses = [[values[response_indices[y, j]] if j < d_eff else values[0] for j in range(d)] for y in range(m)]
    strategy = ClassicalStrategy(d, assignment + 1, responses, k)
    check = eval_witness(spec, strategy_to_probs(strategy, n, m))
    if abs(check - value) > REALIZATION_TOL:
        raise RuntimeError('Maximizing strategy re-evaluates to {:.12g}, not {:.12g}.'.format(check, value))
    logger.debug('Classical bound of %s at d=%d: %.12g over %d strategies.', spec.name, d, check, count)
    return BoundResult(check, spec.name, d, 'classical', strategy, strategies_evaluated=count)
