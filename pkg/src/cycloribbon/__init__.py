"""Colored ribbon combinatorics, the Grothendieck rings of the colored
0-Hecke algebras, and an explicit structure-constant oracle validating
the combinatorial rules."""

from .ribbons import (
    ColoredComposition,
    ColoredPermutation,
    ColoredRibbon,
    anticycloribbon_to_colored_comp,
    colored_comp_to_anticycloribbon,
    colored_compositions,
    colored_descent_composition,
    composition_from_descents,
    descent_class_size,
    descent_set,
    enumerate_anticycloribbons,
    enumerate_cycloribbons,
    fillings_below,
    flip_ribbon,
    inverse_colored_perm,
    is_anticycloribbon,
    is_cycloribbon,
    max_inversion_perm,
    multipartitions,
    shifted_shuffle,
    sorting_covers,
)
from .lincomb import (
    LinComb,
    MR_R,
    MR_S,
    NCSF_R,
    QMR_F,
    SYM_H,
    SYM_S,
    TensorComb,
    lincomb_from_json,
    lincomb_to_json,
)
from .hopf import (
    anti_refinements,
    cartan_map,
    duality_pairing,
    mr_coproduct,
    mr_product_R,
    mr_product_S,
    mr_to_ncsf,
    mr_to_sym,
    multipartition_class,
    qmr_coproduct_F,
    qmr_product_F,
    r_to_s,
    s_to_r,
    schur_in_h,
    sym_to_qmr,
)
from .reptheory import (
    Character,
    cartan_matrix,
    decomposition_matrix,
    dim_projective,
    induce_hecke_projective,
    induce_projectives,
    induce_simples,
    restrict_simple,
    ribbon_from_character,
    simple_character,
    simple_labels,
    projective_labels,
)
from .oracle import (
    AlgebraParams,
    AlgebraElement,
    ExplicitModule,
    OracleError,
    build_induced_module,
    build_shape_module,
    check_socle,
    check_submodule_order,
    composition_factors,
    cross_check_induction,
    enumerate_one_dim_characters,
    left_mult_T,
    left_mult_xi,
    multiply,
    one,
    verify_relations,
)

__version__ = "0.1.0"
