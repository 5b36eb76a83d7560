from dimwit.core import (ProbabilityTable, CorrelatorTable, WitnessSpec, DensityMatrix, Observable, i4_spec,
                         eval_witness, correlators_from_probs, probs_from_quantum, get_witness, load_witness_file)
from dimwit.bounds import BoundResult, classical_bound, seesaw_bound, SeesawConfig
from dimwit.exceptions import InputFileError, StrategyLimitError
