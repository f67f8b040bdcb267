"""Finite racks, braid words, and rack-coloring invariants of braids."""

from .braids import (
    BraidWord,
    apply_relation,
    closure_components,
    compose,
    free_reduce,
    identity,
    inverse,
    parse_braid,
    serialize_braid,
    underlying_permutation,
)
from .coloring import (
    CountingMatrix,
    apply_braid,
    apply_letter,
    closure_colorings,
    counting_matrix,
    index_tuple,
    matrix_multiply,
    trace,
    tuple_index,
)
from .errors import *  # noqa: F401,F403
from .freerack import (
    FreeRackElement,
    FundamentalPointedRack,
    evaluate,
    free_op,
    fundamental_pointed_rack,
    same_bottom_presentation,
)
from .pointed import PointedRack, pointed_counting_invariant, pointed_hom_search, pointed_isomorphic
from .racks import (
    FiniteRack,
    RackHom,
    core_quandle,
    dihedral_quandle,
    hom_search,
    is_isomorphic,
    parse_rack_file,
    serialize_rack,
    trivial_rack,
    ts_rack,
    validate_rack,
)

__version__ = "0.1.0"
