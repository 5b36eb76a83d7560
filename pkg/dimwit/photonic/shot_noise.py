import numpy as np

from dimwit.stats.counts_record import CountsRecord


def simulate_counts(p, shots_per_setting, seed):
    """Draws binomial detector counts for every setting pair of a dichotomic table.

    Each pair (x, y) has its own generator seeded from SeedSequence(seed, spawn_key=(x, y)), so the counts of a pair
    do not depend on the table size or on the order of evaluation.

    :param p: Dichotomic probability table
    :type p: ProbabilityTable
    :param shots_per_setting: Shots N_xy, an integer or an (n, m) array
    :type shots_per_setting: int or array-like
    :param seed: Non-negative integer seed
    :type seed: int
    :rtype: CountsRecord
    """
    if p.k != 2:
        raise ValueError('Shot-noise simulation needs dichotomic outcomes, got k={}.'.format(p.k))
    shots = np.broadcast_to(np.asarray(shots_per_setting), (p.n, p.m))
    if np.any(shots < 1) or np.any(shots != np.round(shots)):
        raise ValueError('Shots per setting must be positive integers.')
    if int(seed) < 0:
        raise ValueError('Seed must be non-negative, got {}.'.format(seed))
    shots = shots.astype(np.int64)
    plus = np.empty((p.n, p.m), dtype=np.int64)
    for x in range(p.n):
        for y in range(p.m):
            rng = np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(x, y)))
            plus[x, y] = rng.binomial(shots[x, y], p.p[0, x, y])
    return CountsRecord(np.stack((plus, shots - plus)), shots)
