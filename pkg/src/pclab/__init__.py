"""pclab: 7-adic congruence checks for two-colour partition counts.

Exact truncated power series, a brute-force partition oracle, the huffing
matrix ``M``, coefficient-vector recursions and the verification suites
built on them.
"""
from .claims import CongruenceClaim, all_claims, claims_for, verify_congruence, watson_claims
from .identities import gf_lhs, gf_rhs, verify_chain_step, verify_gf_identity
from .kernels import BACKEND
from .mtable import (MTable, derive_m_row_from_series, pi_lower_bound, verify_huff_lemma)
from .partitions import (OracleRangeError, PartitionTable, TwoColorTable, lambda_,
                         partition_count, two_color_count)
from .series import (EtaQuotient, NonUnitError, TruncatedSeries, compile_quotient, eta_quotient,
                     eta_series, extract_progression, huff7, inverse, mul, substitute_power)
from .valuation import check_valuation_lemmas, valuation
from .vectors import CoeffVector, VectorEngine, x_vector, y_even_vector, y_odd_vector

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CoeffVector", "CongruenceClaim", "EtaQuotient", "MTable", "NonUnitError",
    "OracleRangeError", "PartitionTable", "TruncatedSeries", "TwoColorTable", "VectorEngine",
    "all_claims", "check_valuation_lemmas", "claims_for", "compile_quotient",
    "derive_m_row_from_series", "eta_quotient", "eta_series", "extract_progression", "gf_lhs",
    "gf_rhs", "huff7", "inverse", "lambda_", "mul", "partition_count", "pi_lower_bound",
    "substitute_power", "two_color_count", "valuation", "verify_chain_step", "verify_congruence",
    "verify_gf_identity", "verify_huff_lemma", "watson_claims", "x_vector", "y_even_vector",
    "y_odd_vector",
]
