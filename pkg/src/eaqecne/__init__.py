"""Tools for q-ary entanglement-assisted quantum codes with noisy ebits.

Layers, bottom up: finite-field tables (:mod:`eaqecne.gf`), row-reduction
subspace algebra (:mod:`eaqecne.linalg`), symplectic geometry of F_q^{2n}
(:mod:`eaqecne.symplectic`), additive codes over GF(q^2)
(:mod:`eaqecne.addcodes`), code-parameter derivation and combination
constructions (:mod:`eaqecne.eaqec`), a dense-matrix Pauli-group oracle
(:mod:`eaqecne.pauli`), and the analytic channel-fidelity comparison
(:mod:`eaqecne.fidelity`).  ``eaqecne.cli`` exposes all of it as one command.
"""

from .addcodes import (AdditiveCode, CodeDecomposition, LinearCode, dual,
                       is_acd, is_dual_containing, is_hermitian_lcd,
                       is_hermitian_self_orthogonal, is_self_orthogonal,
                       min_weight, min_weight_excluding, puncture, radical,
                       radical_decompose)
from .eaqec import (CombinationParams, CombinationReport, EAQECCParams,
                    MatchClassification, QECCParams, classify_match,
                    combine_construct, combine_neb, eaqec_params,
                    linear_formulation, known_tables,
                    puncture_to_eaqecc, stabilizer_params)
from .fidelity import (ChannelModel, FidelityCurve, approx_fidelity,
                       combined_fidelity, compare, crossover_degradation,
                       sweep)
from .gf import FieldElement, FieldSpec, field, quadratic_field
from .pauli import PauliLabel, codespace_dim, commutation_phase, pauli_matrix

__version__ = "0.1.0"

__all__ = [
    "AdditiveCode",
    "ChannelModel",
    "CodeDecomposition",
    "CombinationParams",
    "CombinationReport",
    "EAQECCParams",
    "FidelityCurve",
    "FieldElement",
    "FieldSpec",
    "LinearCode",
    "MatchClassification",
    "PauliLabel",
    "QECCParams",
    "approx_fidelity",
    "classify_match",
    "codespace_dim",
    "combine_construct",
    "combine_neb",
    "combined_fidelity",
    "commutation_phase",
    "compare",
    "crossover_degradation",
    "dual",
    "eaqec_params",
    "field",
    "is_acd",
    "is_dual_containing",
    "is_hermitian_lcd",
    "is_hermitian_self_orthogonal",
    "is_self_orthogonal",
    "linear_formulation",
    "min_weight",
    "min_weight_excluding",
    "pauli_matrix",
    "known_tables",
    "puncture",
    "puncture_to_eaqecc",
    "quadratic_field",
    "radical",
    "radical_decompose",
    "stabilizer_params",
    "sweep",
    "__version__",
]
