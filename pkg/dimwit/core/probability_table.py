import json

import numpy as np

from dimwit.exceptions import InputFileError
from dimwit.helper_funcs import *


def outcome_labels(k):
    """Returns the outcome labels in array order: ('+1', '-1') for dichotomic tables, '1'..'k' otherwise."""
    if k == 2:
        return DICHOTOMIC_LABELS
    return tuple(str(b) for b in range(1, k + 1))


def _read_only(arr):
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


class ProbabilityTable:
    """ProbabilityTable holds the observed or derived distribution P(b|x,y) of a prepare-and-measure experiment with
    n preparations, m measurements and k outcomes. The array is indexed (b, x, y); for k = 2 the outcome index 0 is
    b = +1 and index 1 is b = -1. Instances are immutable."""

    def __init__(self, p, tol=INGEST_NORMALIZATION_TOL):
        """
        :param p: Probabilities indexed (b, x, y)
        :type p: array-like of shape (k, n, m)
        :param tol: Tolerance of the range and normalization checks
        :type tol: float

        """
        p = np.asarray(p, dtype=float)
        if p.ndim != 3:
            raise ValueError('Probability table must be indexed (b, x, y), got an array with {} axes.'.format(p.ndim))
        if p.shape[0] < 2:
            raise ValueError('Probability table needs at least two outcomes, got k={}.'.format(p.shape[0]))
        if not np.all(np.isfinite(p)):
            raise ValueError('Probability table contains non-finite entries.')
        if np.any(p < -tol) or np.any(p > 1 + tol):
            raise ValueError('Probabilities must lie in [0, 1].')
        row_sums = p.sum(axis=0)
        worst = np.max(np.abs(row_sums - 1))
        if worst > tol:
            x, y = np.unravel_index(np.argmax(np.abs(row_sums - 1)), row_sums.shape)
            raise ValueError('P(b|x={},y={}) sums to {:.12g}, not 1 (tolerance {:g}).'
                             .format(x + 1, y + 1, row_sums[x, y], tol))
        self.p = _read_only(np.clip(p, 0, 1))

    @classmethod
    def from_correlators(cls, correlators):
        """Builds the dichotomic table with P(+1|x,y) = (1 + E_xy)/2 and P(-1|x,y) = (1 - E_xy)/2."""
        e = correlators.e
        return cls(np.stack(((1 + e) / 2, (1 - e) / 2)), tol=GENERATED_NORMALIZATION_TOL)

    @property
    def k(self):
        return self.p.shape[0]

    @property
    def n(self):
        return self.p.shape[1]

    @property
    def m(self):
        return self.p.shape[2]

    @property
    def shape(self):
        return self.p.shape

    @property
    def labels(self):
        return outcome_labels(self.k)

    def mix(self, other, weight):
        """Returns the convex combination weight * self + (1 - weight) * other.

        :param other: Table of the same shape
        :type other: ProbabilityTable
        :param weight: Mixing weight in [0, 1]
        :type weight: float
        """
        if other.shape != self.shape:
            raise ValueError('Cannot mix tables of shapes {} and {}.'.format(self.shape, other.shape))
        if not 0 <= weight <= 1:
            raise ValueError('Mixing weight must be in [0, 1].')
        return ProbabilityTable(weight * self.p + (1 - weight) * other.p)

    def to_json_dict(self):
        return {'n': self.n, 'm': self.m, 'k': self.k,
                'p': {label: self.p[b].tolist() for b, label in enumerate(self.labels)}}

    @classmethod
    def from_json_dict(cls, doc):
        """Reads the {"n":..,"m":..,"k":..,"p":{label: [[...]]}} document; rows are preparations x, columns are
        measurements y."""
        try:
            n, m, k = int(doc['n']), int(doc['m']), int(doc['k'])
        except KeyError as err:
            raise ValueError('missing field {}'.format(err))
        except (TypeError, ValueError):
            raise ValueError('fields n, m and k must be integers')
        tables = doc.get('p')
        if not isinstance(tables, dict):
            raise ValueError('field p must map outcome labels to n x m arrays')
        rows = []
        for label in outcome_labels(k):
            if label not in tables:
                raise ValueError('missing field p["{}"]'.format(label))
            arr = np.asarray(tables[label], dtype=float)
            if arr.shape != (n, m):
                raise ValueError('field p["{}"] has shape {}, expected ({}, {})'.format(label, arr.shape, n, m))
            rows.append(arr)
        return cls(np.stack(rows))

    @classmethod
    def load(cls, file_name):
        doc = load_json_document(file_name)
        try:
            return cls.from_json_dict(doc)
        except ValueError as err:
            raise InputFileError(file_name, str(err))

    def save(self, file_name):
        with open(file_name, 'w') as f:
            f.write(to_json(self.to_json_dict()))


class CorrelatorTable:
    """CorrelatorTable holds the dichotomic correlators E_xy = P(+1|x,y) - P(-1|x,y), indexed (x, y)."""

    def __init__(self, e):
        e = np.asarray(e, dtype=float)
        if e.ndim != 2:
            raise ValueError('Correlator table must be indexed (x, y).')
        if np.any(np.abs(e) > 1 + CORRELATOR_TOL):
            raise ValueError('Correlators must lie in [-1, 1].')
        self.e = _read_only(e)

    @property
    def n(self):
        return self.e.shape[0]

    @property
    def m(self):
        return self.e.shape[1]


def correlators_from_probs(p):
    """Computes E_xy = P(+1|x,y) - P(-1|x,y) for every preparation and measurement.

    :param p: Dichotomic probability table
    :type p: ProbabilityTable
    :returns: The correlators
    :rtype: CorrelatorTable
    """
    if p.k != 2:
        raise ValueError('Correlators need dichotomic outcomes, got k={}.'.format(p.k))
    if np.max(np.abs(p.p.sum(axis=0) - 1)) > INGEST_NORMALIZATION_TOL:
        raise ValueError('Probability table is not normalized.')
    return CorrelatorTable(p.p[0] - p.p[1])


def load_json_document(file_name):
    """Reads a JSON file, reporting syntax errors with their line and column."""
    try:
        with open(file_name) as f:
            return json.load(f)
    except json.JSONDecodeError as err:
        raise InputFileError(file_name, 'line {}, column {}: {}'.format(err.lineno, err.colno, err.msg))
    except OSError as err:
        raise InputFileError(file_name, err.strerror or str(err))
