"""Exact verification of quantum dilogarithm identities for generalized cluster algebras."""
from .coeff import Coeff, qpow, zvar
from .dilog import PsiSpec, psi_coefficients, psi_of
from .errors import QGCAError
from .identity import (
    MutationSequence,
    VerificationReport,
    check_periodicity,
    run_report,
    tropical_identity_check,
    universal_identity_check,
)
from .mutation import QuantumSeed, initial_seed, mutate_matrix, mutate_seed
from .series import ConeSeries
from .torus import SYMBOLIC, ExchangeData, SkewForm, TorusElement
from .tropical import TropicalState, sequence_data, tropical_mutate, tropical_sign

__all__ = [
    "Coeff",
    "ConeSeries",
    "ExchangeData",
    "MutationSequence",
    "PsiSpec",
    "QGCAError",
    "QuantumSeed",
    "SYMBOLIC",
    "SkewForm",
    "TorusElement",
    "TropicalState",
    "VerificationReport",
    "check_periodicity",
    "initial_seed",
    "mutate_matrix",
    "mutate_seed",
    "psi_coefficients",
    "psi_of",
    "qpow",
    "run_report",
    "sequence_data",
    "tropical_identity_check",
    "tropical_mutate",
    "tropical_sign",
    "universal_identity_check",
    "zvar",
]
