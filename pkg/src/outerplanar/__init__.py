"""Tensor product decompositions for SL(2) indexed by outerplanar graphs."""

from .charring import (
    NotACharacterError,
    SymLaurent,
    catalan,
    char_product,
    decompose_char,
    irr_char,
    multiplicity,
    multiplicity_by_recursion,
)
from .decomp import DecompositionReport, decompose, full_basis_matrix, project
from .opgraph import (
    GraphError,
    Orientation,
    OuterplanarGraph,
    canonical_orientation,
    count_graphs,
    enumerate_graphs,
    graph_from_leading,
    leading_basis_exponents,
    orientations,
)
from .oracle import SizeGuardError, invariant_subspace_bruteforce, isotypic_dims_by_weights, span_equals
from .sl2act import GroupElement, LieGenerator, act_group, act_lie, weight
from .tensorspace import (
    SparseTensor,
    TensorSpace,
    build_t_G,
    build_t_G_i,
    componentwise_product,
    leading_entry,
    lex_compare,
    rooted_tensors,
    s_G_image,
)

__version__ = "0.1.0"
