"""Exact combinatorics of quantum Schubert cells: positive subexpressions,
exponent matrices, quantum tori, toric frames and a quantum-matrix oracle."""

from .cartan import CartanData, builtin_cartan, cartan_from_json, symmetrizer
from .errors import InputError, InternalError, QSchubertError
from .exponents import a_matrix, b_matrix, quasi_comm_exponent_direct, quasi_comm_exponent_reverse
from .frames import PiElement, ToricFrame, frame_bicharacter, xi_enumerate
from .qtorus import CommutationMatrix, TorusElement, invert_monomial, transport_commutation
from .scalars import ScalarQ, scalar_coeff
from .subexpr import lp, rp
from .weyl import WeylElement, bruhat_leq, from_word, inverse, multiply

__all__ = [
    "CartanData", "builtin_cartan", "cartan_from_json", "symmetrizer",
    "QSchubertError", "InputError", "InternalError",
    "a_matrix", "b_matrix", "quasi_comm_exponent_direct", "quasi_comm_exponent_reverse",
    "PiElement", "ToricFrame", "frame_bicharacter", "xi_enumerate",
    "CommutationMatrix", "TorusElement", "invert_monomial", "transport_commutation",
    "ScalarQ", "scalar_coeff", "rp", "lp",
    "WeylElement", "bruhat_leq", "from_word", "inverse", "multiply",
]

__version__ = "0.1.0"
