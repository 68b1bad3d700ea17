"""Finite ordered-algebra workbench.

Builds finite lattices and commutative residuated structures from explicit
tables, forms full twist-products with either of two adjoint operation
pairs, carves out the focal subsets P_a = {(x,y) : x∧y ≤ a ≤ x∨y}, and
mechanically verifies or refutes the structural laws connecting them, both
on bundled examples and on every small lattice up to isomorphism.
"""

from .core_order import (
    Carrier,
    FiniteLattice,
    Involution,
    check_involution,
    comparable_with_all,
    dual,
    hasse_covers,
    is_distributive,
    is_join_irreducible,
    is_meet_irreducible,
    validate_lattice,
)
from .errors import (
    AlgebraError,
    DocumentSyntaxError,
    DocumentValidationError,
    HypothesisViolated,
    ImpMismatch,
    NoResiduum,
    NotALattice,
    NotAMonoid,
    NotAPoset,
    NotMV,
    PreconditionViolated,
    SizeOutOfRange,
    UnknownLabel,
    UnknownTarget,
)
from .report import CheckReport
from .residuated import (
    MVAlgebra,
    ResiduatedStructure,
    check_integral_laws,
    check_mv,
    check_residuated,
    derive_residuum,
    dnl_negation,
    is_integral,
    mv_to_residuated,
    residuated_to_mv,
    satisfies_dnl,
)
from .twist import (
    FLAVOR_BC,
    FLAVOR_DN,
    TwistAlgebra,
    build_twist,
    check_adjoint,
    check_componentwise_negation,
    check_orthogonal_dnl,
    check_swap_interdefinability,
    index_pair,
    pair_index,
    pair_label,
    twist_lattice,
    twist_product,
    twist_product_dn,
    twist_residuum,
    twist_residuum_dn,
)
from .kleene import (
    FocalSubset,
    adjoint_pair_criterion,
    atom_closure_condition,
    atom_residuum_condition,
    check_embedding,
    closure_check,
    comparability_characterization,
    componentwise_involution,
    distributive_closure_condition,
    dn_product_closure_check,
    dn_residuum_triviality_check,
    focal_subset,
    is_kleene,
    is_pseudo_kleene,
    is_sublattice,
    pseudo_kleene_transfer_check,
    restrict_operation,
    sublattice_criterion,
    subset_lattice,
    swap_involution,
)
from .search import (
    MAX_ENUM_SIZE,
    EnumerationTask,
    TaskReport,
    antitone_involutions,
    canonical_form,
    enumerate_lattices,
    enumerate_residuations,
    run_task,
)
from .algfile import (
    AlgebraDocument,
    bundled_document,
    bundled_path,
    document_from_lattice,
    document_from_residuated,
    load,
    load_involution,
    parse_document,
    serialize_document,
)
from .dot import render_dot

__version__ = "0.1.0"
