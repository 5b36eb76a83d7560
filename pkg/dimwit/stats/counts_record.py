import numpy as np

from dimwit.core.probability_table import load_json_document, outcome_labels
from dimwit.exceptions import InputFileError
from dimwit.helper_funcs import to_json


class CountsRecord:
    """Detector counts N(b|x,y) indexed (b, x, y) together with the shots N_xy spent on each setting pair."""

    def __init__(self, counts, shots=None):
        """
        :param counts: Non-negative integer counts of shape (k, n, m)
        :type counts: array-like
        :param shots: Shots per setting pair, an integer or an (n, m) array; defaults to the column sums
        :type shots: int or array-like

        """
        try:
            counts = np.asarray(counts, dtype=float)
        except (TypeError, ValueError):
            raise ValueError('Counts must be numbers.')
        if counts.ndim != 3 or counts.shape[0] < 2:
            raise ValueError('Counts must be indexed (b, x, y) with at least two outcomes.')
        if not np.all(np.isfinite(counts)) or np.any(counts != np.round(counts)):
            raise ValueError('Counts must be integers.')
        counts = counts.astype(np.int64)
        if np.any(counts < 0):
            raise ValueError('Counts must be non-negative.')
        totals = counts.sum(axis=0)
        if shots is None:
            shots = totals
        shots = np.broadcast_to(np.asarray(shots), totals.shape).astype(np.int64)
        if np.any(shots != totals):
            x, y = np.argwhere(shots != totals)[0]
            raise ValueError('Counts of x={}, y={} add up to {}, not to {} shots.'
                             .format(x + 1, y + 1, totals[x, y], shots[x, y]))
        self.counts = counts
        self.shots = np.array(shots)

    @property
    def k(self):
        return self.counts.shape[0]

    @property
    def n(self):
        return self.counts.shape[1]

    @property
    def m(self):
        return self.counts.shape[2]

    @property
    def labels(self):
        return outcome_labels(self.k)

    def to_json_dict(self):
        shots = self.shots
        shots = int(shots.flat[0]) if np.all(shots == shots.flat[0]) else shots.tolist()
        return {'shots': shots, 'counts': {label: self.counts[b].tolist() for b, label in enumerate(self.labels)}}

    @classmethod
    def from_json_dict(cls, doc):
        """Reads {"shots": N or [[...]], "counts": {"+1": [[...]], "-1": [[...]]}}."""
        if not isinstance(doc, dict) or 'counts' not in doc:
            raise ValueError('missing field counts')
        tables = doc['counts']
        if not isinstance(tables, dict) or len(tables) < 2:
            raise ValueError('field counts must map at least two outcome labels to n x m arrays')
        rows = []
        for label in outcome_labels(len(tables)):
            if label not in tables:
                raise ValueError('missing field counts["{}"]'.format(label))
            rows.append(_numeric_field(tables[label], 'counts["{}"]'.format(label)))
        if len({row.shape for row in rows}) != 1 or rows[0].ndim != 2:
            raise ValueError('all count tables must be n x m arrays of equal shape')
        shots = doc.get('shots')
        if shots is not None:
            shots = _numeric_field(shots, 'shots')
        return cls(np.stack(rows), shots)

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


def _numeric_field(value, field):
    # numpy turns null into nan under dtype=float
    try:
        array = np.asarray(value, dtype=float)
    except (TypeError, ValueError):
        raise ValueError('field {} must hold numbers'.format(field))
    if not np.all(np.isfinite(array)):
        raise ValueError('field {} must hold finite numbers'.format(field))
    return array
