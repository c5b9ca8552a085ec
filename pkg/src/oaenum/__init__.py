"""Enumeration, construction and canonicalization of two-level OA(lambda 2^d, d+2, 2, d)'s."""

from .canon import JShort, JStar, SignAssignment, canonicalize, isomorphic, short_j, solve_signs
from .construct import build, build_catalog, build_d_plus_1, verify_oa
from .enumeration import IntervalSet, SolutionTuple, count, jstars, solutions, solutions_d_plus_1
from .errors import (
    InfeasibleJError,
    MalformedDesignError,
    OAError,
    ParameterError,
    ParseError,
    ShapeError,
    SizeError,
    UnsupportedDropError,
)
from .jchar import Design, JFull, NVector, ParityReport, check_pair_bound, check_parity, j_full, n_from_j, n_vector, strength
from .subsets import ArrayParams, hadamard_entry, mask_of, run_row

__version__ = "0.1.0"
