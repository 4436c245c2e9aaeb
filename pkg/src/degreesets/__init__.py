"""Realize finite sets containing 0 as mapping degree sets, with checkable certificates."""
from .setalg import DegreeSet, SeqB, Rat, sumset_of_sequence, add_sets, intersect_all, scale_set, scale_seq
from .decompose import Decomposition, decompose_integer_set, decompose_rational_set
from .calculus import HypothesisViolation, grouped_degree_set, self_degree_upper_bound
from .realize import Certificate, chirality_flag, realize, realize_adams, realize_circle3, realize_rational
from .verify import VerificationReport, oracle_sumset, verify_certificate, exhaustive_smallset_sweep

__version__ = "0.1.0"
