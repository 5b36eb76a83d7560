from .counts_record import CountsRecord
from .error_propagation import probs_from_counts, witness_with_error, wilson_standard_errors, wilson_sigma
from .bounds_table import BoundsTable
from .certification import CertificationReport, certify, confidence_to_k
