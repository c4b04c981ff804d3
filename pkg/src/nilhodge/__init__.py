"""Mixed Hodge polynomials of representation and character varieties of nilpotent groups."""

from .algebra import RationalPoly, SeriesTruncation
from .invariants import (
    InvariantRequest,
    assemble,
    counting_poly,
    equivariant_mu,
    mu_char,
    mu_char_compact,
    mu_rep,
    specialize,
    to_tuv,
)
from .weyl import GroupDescriptor, classes_type_A, classes_type_C, parse_group

__version__ = "0.1.0"
