from .probability_table import ProbabilityTable, CorrelatorTable, correlators_from_probs, outcome_labels
from .witness_spec import (WitnessSpec, i4_spec, eval_witness, eval_correlator_witness, get_witness,
                           load_witness_file, I4_COEFFICIENTS)
from .operators import DensityMatrix, Observable
from .quantum import probs_from_quantum
