"""Exact torsion of quasi-isomorphisms between based chain complexes.

A small exact-arithmetic stack: rationals and rational functions in t,
dense linear algebra under the row-vector convention, based chain
complexes with canonical homology data, chain maps, the torsion of
quasi-isomorphisms with its sign laws, and a Smith-normal-form layer for
free complexes over Q[t].
"""

from .errors import TorsionError
from .fields import (
    FIELD_BY_NAME,
    QPOLY,
    QQ,
    QT,
    Polynomial,
    RationalFunction,
    poly_divmod,
    poly_gcd,
    rat_parse,
    ratfun_parse,
)
from .linalg import (
    Matrix,
    RowBasis,
    determinant,
    image_basis,
    kernel_basis,
    matrix_inverse,
    rref,
    solve_row,
    transition_matrix,
)
from .complexes import (
    BasedChainComplex,
    HomologyData,
    direct_sum,
    dual_complex,
    homology_data,
    is_acyclic,
    make_complex,
    make_elementary,
    pad_complex,
    validate_complex,
    zero_complex,
)
from .chain_maps import (
    ChainHomotopy,
    ChainMap,
    InducedMaps,
    check_homotopy,
    compose,
    direct_sum_map,
    dual_map,
    identity_map,
    induced_homology_maps,
    is_quasi_isomorphism,
    make_chain_map,
    make_homotopy,
    make_injection,
    make_projection,
    triangular_extension,
    validate_chain_map,
    zero_map,
)
from .torsion import (
    BasisChoice,
    DimensionProfile,
    base_change_factor,
    dimension_profile,
    predict_dual_sign,
    predict_sum_sign,
    torsion,
    torsion_acyclic,
    torsion_brackets,
    torsion_quotient,
    torsion_self_map,
    torsion_with_bases,
)
from .ufd import (
    SmithDecomposition,
    homology_orders,
    make_poly_chain_map,
    make_poly_complex,
    order_of_homology,
    smith_normal_form,
    tensor_map,
    tensor_to_fractions,
    torsion_over_ufd,
    turaev_torsion,
)

__version__ = "0.1.0"
