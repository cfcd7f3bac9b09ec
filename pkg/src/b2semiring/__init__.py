"""Semiring identities of the Brandt semigroup B2: decide, refute, prove."""

from .algebra import B2, Valuation, add, eval_poly, eval_word, holds, mul
from .checker import check_derivation, check_identity_proof, check_instance, verify
from .decision import Condition, Verdict, decide, decide_inequality
from .derivation import NotDerivable, derive_identity, derive_inequality, derive_word
from .oracle import enumerate_identities, find_counterexample, oracle_check
from .proof import AxiomInstance, Derivation, DerivationNode
from .rho import Position, RhoPartition, build_rho, connection_path, generating_pairs, partitions_equal
from .terms import ParseError, Polynomial, content, parse_polynomial, print_polynomial
from .witness import build_witness, valuation_from_coloring

__version__ = "0.1.0"
