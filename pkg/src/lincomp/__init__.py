"""Linear network codes for computing linear functions at a single receiver."""

__version__ = "0.1.0"

from .ff import ExtField, Felem, PrimeField, find_irreducible, make_prime_field
from .netmodel import Network, parse_network
from .code import LinearCode, TargetMatrix, is_solution, simulate, transfer_matrix
from .cuts import CutReport, check_necessary, mincut_ratio, separated_sources
from .mvpoly import IdealJ, MvPoly, Verdict, buchberger, pin, solvable, symbolic_transfer
from .equiv import Classification, Equivalence, binary_zero_transform, canonicalize, classify, factor_iu
from .synth import SynthResult, synthesize, synthesize_routing, synthesize_sum, synthesize_units
from .counterex import CounterexampleBundle, build_n1, build_np, induced_gadget_target

__all__ = [
    "ExtField", "Felem", "PrimeField", "find_irreducible", "make_prime_field",
    "Network", "parse_network",
    "LinearCode", "TargetMatrix", "is_solution", "simulate", "transfer_matrix",
    "CutReport", "check_necessary", "mincut_ratio", "separated_sources",
    "IdealJ", "MvPoly", "Verdict", "buchberger", "pin", "solvable",
    "symbolic_transfer",
    "Classification", "Equivalence", "binary_zero_transform", "canonicalize",
    "classify", "factor_iu",
    "SynthResult", "synthesize", "synthesize_routing", "synthesize_sum",
    "synthesize_units",
    "CounterexampleBundle", "build_n1", "build_np", "induced_gadget_target",
]
